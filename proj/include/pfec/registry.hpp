#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfec/families.hpp"
#include "pfec/security.hpp"

namespace pfec {

struct RegistryEntry {
    std::string name;  // unique key, e.g. "bn-u1"
    CurveInstance inst;
    std::optional<SecurityReport> security;
    std::string provenance;  // searched | table-2.8 | table-2.9 | manual
    std::string created_at;  // ISO 8601 UTC
};

struct CliConfig {
    int mr_rounds = 40;
    Integer naive_count_bound = 1000000;
    unsigned search_workers = 1;
    unsigned long rng_seed = 1;
    std::string output_format = "table";  // table | json | csv

    // Environment overrides: PFEC_MR_ROUNDS, PFEC_NAIVE_BOUND, PFEC_WORKERS,
    // PFEC_RNG_SEED, PFEC_FORMAT.
    static CliConfig from_env();
};

class Registry {
public:
    static Registry load(const std::string& path, int mr_rounds = 40);
    void save(const std::string& path) const;  // single writer, advisory lock

    // Throws on duplicate names or entries failing re-validation.
    void add(RegistryEntry entry, int mr_rounds = 40);
    const RegistryEntry* find(const std::string& name) const;
    const std::vector<RegistryEntry>& entries() const { return entries_; }

    std::string to_json() const;
    static Registry from_json(const std::string& text, int mr_rounds = 40);

private:
    std::vector<RegistryEntry> entries_;
};

// Full revalidation: primality, CM identity, cofactor identity, embedding
// degree. Returns a reason on failure.
std::optional<std::string> validate_entry(const RegistryEntry& entry, int mr_rounds = 40);

std::string iso8601_now();

}  // namespace pfec
