#include "pfec/protocols.hpp"

#include <openssl/sha.h>

#include <json.hpp>

namespace pfec {

using nlohmann::json;

const Integer& ProtocolLimits::max_p() {
    static const Integer v = Integer(1) << 64;
    return v;
}

Bytes sha256(const Bytes& data) {
    Bytes out(SHA256_DIGEST_LENGTH);
    SHA256(data.data(), data.size(), out.data());
    return out;
}

namespace {

Bytes encode_with_counter(const Bytes& seed, uint32_t counter) {
    Bytes buf = seed;
    buf.push_back(static_cast<unsigned char>(counter >> 24));
    buf.push_back(static_cast<unsigned char>(counter >> 16));
    buf.push_back(static_cast<unsigned char>(counter >> 8));
    buf.push_back(static_cast<unsigned char>(counter));
    return sha256(buf);
}

Bytes element_encoding(const FieldElement& e) {
    std::string s = e.to_string();
    return Bytes(s.begin(), s.end());
}

void require_desk_scale(const PairingContext& ctx) {
    if (ctx.p >= ProtocolLimits::max_p())
        throw error("protocol demos refuse p at or above 2^64");
}

}  // namespace

Bytes mask_from_element(const FieldElement& e, std::size_t length) {
    Bytes seed = element_encoding(e);
    Bytes out;
    uint32_t counter = 0;
    while (out.size() < length) {
        Bytes block = encode_with_counter(seed, counter++);
        out.insert(out.end(), block.begin(), block.end());
    }
    out.resize(length);
    return out;
}

CurvePoint hash_to_point(const PairingContext& ctx, const Bytes& data) {
    require_desk_scale(ctx);
    const Field& f = ctx.base.field();
    Integer cofactor = ctx.base_order / ctx.r;
    for (uint32_t counter = 0; counter < 256; ++counter) {
        Bytes digest = encode_with_counter(data, counter);
        Integer x = 0;
        for (unsigned char b : digest) x = (x << 8) | b;
        x %= ctx.p;
        FieldElement fx = f.from_integer(x);
        FieldElement rhs = fx * fx * fx + ctx.base.a() * fx + ctx.base.b();
        auto y = sqrt_mod(rhs);
        if (!y) continue;
        CurvePoint pt = CurvePoint::affine(ctx.base, fx, *y);
        CurvePoint out = scalar_mul(cofactor, pt);
        if (out.is_infinity()) continue;
        if (!scalar_mul(ctx.r, out).is_infinity())
            throw error("hash_to_point: cofactor clearing failed");
        return out;
    }
    throw error("hash_to_point: counter budget exhausted");
}

IbeSystem ibe_setup(const PairingContext& ctx, Rng& rng) {
    require_desk_scale(ctx);
    if (!ctx.has_distortion)
        throw error("the identity-based demo needs the distortion-map context");
    IbeSystem sys{ctx, 0, CurvePoint::infinity(ctx.base), CurvePoint::infinity(ctx.base)};
    sys.base = find_point_of_order(ctx.base, ctx.r, ctx.base_order, rng);
    sys.master_s = 1 + rng.below(ctx.r - 1);
    sys.pub = scalar_mul(sys.master_s, sys.base);
    return sys;
}

IbeCiphertext ibe_encrypt(const IbeSystem& sys, const Bytes& identity, const Bytes& message,
                          const Integer& ephemeral, Rng& rng) {
    CurvePoint id_point = hash_to_point(sys.ctx, identity);
    FieldElement gid = modified_weil(sys.ctx, id_point, sys.pub, rng).pow(ephemeral);
    IbeCiphertext ct{scalar_mul(ephemeral, sys.base), mask_from_element(gid, message.size())};
    for (std::size_t i = 0; i < message.size(); ++i) ct.c1[i] ^= message[i];
    return ct;
}

CurvePoint ibe_extract(const IbeSystem& sys, const Bytes& identity) {
    return scalar_mul(sys.master_s, hash_to_point(sys.ctx, identity));
}

Bytes ibe_decrypt(const IbeSystem& sys, const CurvePoint& private_key, const IbeCiphertext& ct,
                  Rng& rng) {
    FieldElement key = modified_weil(sys.ctx, private_key, ct.c0, rng);
    Bytes out = mask_from_element(key, ct.c1.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= ct.c1[i];
    return out;
}

JouxTranscript joux_exchange(const PairingContext& ctx, const Integer& a, const Integer& b,
                             const Integer& c, Rng& rng) {
    require_desk_scale(ctx);
    for (const Integer* v : {&a, &b, &c})
        if (*v < 1 || *v >= ctx.r) throw error("exponents must lie in [1, r)");
    CurvePoint base = find_point_of_order(ctx.base, ctx.r, ctx.base_order, rng);

    JouxTranscript t{scalar_mul(a, base), scalar_mul(b, base), scalar_mul(c, base),
                     FieldElement(), FieldElement(), FieldElement(), false};
    if (ctx.has_distortion) {
        t.key_a = modified_weil(ctx, t.b_pub, t.c_pub, rng).pow(a);
        t.key_b = modified_weil(ctx, t.a_pub, t.c_pub, rng).pow(b);
        t.key_c = modified_weil(ctx, t.a_pub, t.b_pub, rng).pow(c);
    } else {
        // ordinary context: publish companion points on the second generator
        CurvePoint q = random_torsion_point(ctx, rng);
        CurvePoint a2 = scalar_mul(a, q), b2 = scalar_mul(b, q), c2 = scalar_mul(c, q);
        t.key_a = tate_pairing(ctx, t.b_pub, c2, rng).pow(a);
        t.key_b = tate_pairing(ctx, t.a_pub, c2, rng).pow(b);
        t.key_c = tate_pairing(ctx, t.a_pub, b2, rng).pow(c);
    }
    t.agree = (t.key_a == t.key_b) && (t.key_b == t.key_c);
    return t;
}

namespace {

// deterministic generators shared by keygen, sign, and verify
CurvePoint bls_base(const PairingContext& ctx) {
    Rng rng(0xb157eedULL);
    return find_point_of_order(ctx.base, ctx.r, ctx.base_order, rng);
}

CurvePoint bls_base2(const PairingContext& ctx) {
    Rng rng(0xb157eed2ULL);
    return random_torsion_point(ctx, rng);
}

}  // namespace

BlsKeypair bls_keygen(const PairingContext& ctx, Rng& rng) {
    return bls_keygen(ctx, 1 + rng.below(ctx.r - 1));
}

BlsKeypair bls_keygen(const PairingContext& ctx, const Integer& secret) {
    require_desk_scale(ctx);
    BlsKeypair keys{secret % ctx.r, scalar_mul(secret, bls_base(ctx)),
                    CurvePoint::infinity(ctx.ext), false};
    if (!ctx.has_distortion) {
        keys.pub2 = scalar_mul(keys.secret, bls_base2(ctx));
        keys.has_pub2 = true;
    }
    return keys;
}

CurvePoint bls_sign(const PairingContext& ctx, const BlsKeypair& keys, const Bytes& message) {
    return scalar_mul(keys.secret, hash_to_point(ctx, message));
}

bool bls_verify(const PairingContext& ctx, const BlsKeypair& pub, const Bytes& message,
                const CurvePoint& signature, Rng& rng) {
    require_desk_scale(ctx);
    if (!is_on_curve(signature) || signature.is_infinity()) return false;
    CurvePoint h = hash_to_point(ctx, message);
    if (ctx.has_distortion) {
        // e(P, S) == e(A, H(m))
        FieldElement lhs = modified_weil(ctx, bls_base(ctx), signature, rng);
        FieldElement rhs = modified_weil(ctx, pub.pub, h, rng);
        return lhs == rhs;
    }
    if (!pub.has_pub2) return false;
    // e(S, Q0) == e(H(m), A2)
    CurvePoint q0 = bls_base2(ctx);
    FieldElement lhs = tate_pairing(ctx, lift_to_ext(ctx, signature), q0, rng);
    FieldElement rhs = tate_pairing(ctx, lift_to_ext(ctx, h), pub.pub2, rng);
    return lhs == rhs;
}

MovDemoResult mov_demo(const PairingContext& ctx, const Integer& secret_n, Rng& rng) {
    require_desk_scale(ctx);
    CurvePoint base = find_point_of_order(ctx.base, ctx.r, ctx.base_order, rng);
    CurvePoint target = scalar_mul(secret_n, base);

    MovDemoResult res;
    res.planted = secret_n % ctx.r;
    res.recovered = mov_reduce(ctx, base, target, rng);
    res.bsgs_direct = bsgs_curve(base, target, ctx.r);
    res.ok = (res.recovered == res.planted) && (res.bsgs_direct == res.planted);

    // record the field DLP pair for the transcript
    CurvePoint t_aux = random_torsion_point(ctx, rng);
    FieldElement a = weil_pairing(ctx, base, t_aux, rng);
    FieldElement b = a.pow(res.recovered);
    res.dlp_pair = "a=" + a.to_string() + " b=" + b.to_string();
    return res;
}

PairingContext supersingular_context(const Integer& p, const Integer& r,
                                     const Integer& naive_bound) {
    if (p % 4 != 3) throw error("the supersingular context needs p = 3 mod 4");
    Field fp = Field::prime(p);
    CurveParams curve(fp, fp.one(), fp.zero());  // y^2 = x^3 + x
    return make_pairing_context(curve, r, 6, naive_bound);
}

std::string joux_to_json(const JouxTranscript& t) {
    json j;
    j["A"] = t.a_pub.to_string();
    j["B"] = t.b_pub.to_string();
    j["C"] = t.c_pub.to_string();
    j["key_a"] = t.key_a.to_string();
    j["key_b"] = t.key_b.to_string();
    j["key_c"] = t.key_c.to_string();
    j["agree"] = t.agree;
    return j.dump(2);
}

std::string mov_to_json(const MovDemoResult& m) {
    json j;
    j["planted"] = int_to_hex(m.planted);
    j["recovered"] = int_to_hex(m.recovered);
    j["bsgs_direct"] = int_to_hex(m.bsgs_direct);
    j["dlp_pair"] = m.dlp_pair;
    j["ok"] = m.ok;
    return j.dump(2);
}

}  // namespace pfec
