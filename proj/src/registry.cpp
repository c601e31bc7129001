#include "pfec/registry.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

namespace pfec {

using nlohmann::json;

std::string iso8601_now() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

CliConfig CliConfig::from_env() {
    CliConfig cfg;
    if (const char* v = std::getenv("PFEC_MR_ROUNDS")) cfg.mr_rounds = std::atoi(v);
    if (const char* v = std::getenv("PFEC_NAIVE_BOUND")) cfg.naive_count_bound = int_from_text(v);
    if (const char* v = std::getenv("PFEC_WORKERS")) cfg.search_workers = std::atoi(v);
    if (const char* v = std::getenv("PFEC_RNG_SEED")) cfg.rng_seed = std::strtoul(v, nullptr, 10);
    if (const char* v = std::getenv("PFEC_FORMAT")) cfg.output_format = v;
    if (cfg.mr_rounds <= 0 || cfg.search_workers == 0 || cfg.naive_count_bound <= 0)
        throw error("configuration bounds must be positive");
    return cfg;
}

std::optional<std::string> validate_entry(const RegistryEntry& entry, int mr_rounds) {
    const CurveInstance& inst = entry.inst;
    if (!is_probable_prime(inst.p, mr_rounds)) return "p fails primality";
    if (!is_probable_prime(inst.r, mr_rounds)) return "r fails primality";
    if (inst.p + 1 - inst.t != inst.cofactor * inst.r) return "cofactor identity fails";
    if (4 * inst.p - inst.t * inst.t != inst.d * inst.cm_y * inst.cm_y) return "CM identity fails";
    // embedding degree: r | p^k - 1 and r does not divide p^i - 1 for i < k
    if (mod_pow(inst.p % inst.r, Integer(inst.k), inst.r) != 1)
        return "r does not divide p^k - 1";
    for (unsigned i = 1; i < inst.k; ++i)
        if (mod_pow(inst.p % inst.r, Integer(i), inst.r) == 1)
            return "embedding degree is smaller than k";
    return std::nullopt;
}

namespace {

json entry_to_json(const RegistryEntry& e) {
    json j = json::parse(instance_to_json(e.inst));
    j["name"] = e.name;
    j["rho"] = rat_to_text(Rational(static_cast<long>(bit_length(e.inst.p)),
                                    static_cast<long>(bit_length(e.inst.r))));
    j["provenance"] = e.provenance;
    j["created_at"] = e.created_at;
    if (e.security) j["security"] = json::parse(report_to_json(*e.security));
    return j;
}

RegistryEntry entry_from_json(const json& j) {
    RegistryEntry e;
    e.name = j.at("name").get<std::string>();
    e.provenance = j.value("provenance", "manual");
    e.created_at = j.value("created_at", "");
    CurveInstance& i = e.inst;
    i.family = j.at("family").get<std::string>();
    i.k = j.at("k").get<unsigned>();
    i.u = int_from_text(j.at("u").get<std::string>());
    i.p = int_from_text(j.at("p").get<std::string>());
    i.r = int_from_text(j.at("r").get<std::string>());
    i.t = int_from_text(j.at("t").get<std::string>());
    i.d = int_from_text(j.at("d").get<std::string>());
    i.cm_y = int_from_text(j.at("cm_y").get<std::string>());
    i.cofactor = int_from_text(j.at("cofactor").get<std::string>());
    if (j.contains("curve_a")) i.curve_a = int_from_text(j.at("curve_a").get<std::string>());
    if (j.contains("curve_b")) i.curve_b = int_from_text(j.at("curve_b").get<std::string>());
    return e;
}

}  // namespace

std::string Registry::to_json() const {
    json j;
    j["schema_version"] = 1;
    json arr = json::array();
    for (const auto& e : entries_) arr.push_back(entry_to_json(e));
    j["entries"] = arr;
    return j.dump(2) + "\n";
}

Registry Registry::from_json(const std::string& text, int mr_rounds) {
    json j = json::parse(text);
    if (j.at("schema_version").get<int>() != 1) throw error("unsupported registry schema version");
    Registry reg;
    for (const auto& je : j.at("entries")) {
        RegistryEntry e = entry_from_json(je);
        if (auto reason = validate_entry(e, mr_rounds))
            throw error("registry entry '" + e.name + "' rejected: " + *reason);
        reg.entries_.push_back(std::move(e));
    }
    return reg;
}

Registry Registry::load(const std::string& path, int mr_rounds) {
    std::ifstream in(path);
    if (!in) return Registry{};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str().empty()) return Registry{};
    return from_json(buf.str(), mr_rounds);
}

void Registry::save(const std::string& path) const {
    int fd = ::open(path.c_str(), O_WRONLY | O_CREAT, 0644);
    if (fd < 0) throw error("cannot open registry file: " + path);
    if (flock(fd, LOCK_EX) != 0) {
        ::close(fd);
        throw error("cannot lock registry file: " + path);
    }
    std::string text = to_json();
    if (ftruncate(fd, 0) != 0 || ::write(fd, text.data(), text.size()) < 0) {
        flock(fd, LOCK_UN);
        ::close(fd);
        throw error("cannot write registry file: " + path);
    }
    flock(fd, LOCK_UN);
    ::close(fd);
}

void Registry::add(RegistryEntry entry, int mr_rounds) {
    if (find(entry.name)) throw error("duplicate registry entry: " + entry.name);
    if (auto reason = validate_entry(entry, mr_rounds))
        throw error("entry '" + entry.name + "' rejected: " + *reason);
    if (entry.created_at.empty()) entry.created_at = iso8601_now();
    entries_.push_back(std::move(entry));
}

const RegistryEntry* Registry::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace pfec
