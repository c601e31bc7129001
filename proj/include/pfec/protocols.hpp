#pragma once

#include <string>
#include <vector>

#include "pfec/pairing.hpp"

namespace pfec {

// Desk-scale demos; contexts refuse p above 2^64 and are explicitly not
// constant time.
struct ProtocolLimits {
    static const Integer& max_p();
};

using Bytes = std::vector<unsigned char>;

Bytes sha256(const Bytes& data);

// Counter-mode SHA-256 expansion keyed on the canonical element encoding.
Bytes mask_from_element(const FieldElement& e, std::size_t length);

// Try-and-increment hash onto the order-r subgroup, deterministic per input.
CurvePoint hash_to_point(const PairingContext& ctx, const Bytes& data);

struct IbeSystem {
    PairingContext ctx;
    Integer master_s;
    CurvePoint base;    // P, order r on the base curve
    CurvePoint pub;     // P0 = s P
};

IbeSystem ibe_setup(const PairingContext& ctx, Rng& rng);

struct IbeCiphertext {
    CurvePoint c0;
    Bytes c1;
};

IbeCiphertext ibe_encrypt(const IbeSystem& sys, const Bytes& identity, const Bytes& message,
                          const Integer& ephemeral, Rng& rng);
CurvePoint ibe_extract(const IbeSystem& sys, const Bytes& identity);
Bytes ibe_decrypt(const IbeSystem& sys, const CurvePoint& private_key, const IbeCiphertext& ct,
                  Rng& rng);

struct JouxTranscript {
    CurvePoint a_pub, b_pub, c_pub;
    FieldElement key_a, key_b, key_c;
    bool agree = false;
};

JouxTranscript joux_exchange(const PairingContext& ctx, const Integer& a, const Integer& b,
                             const Integer& c, Rng& rng);

struct BlsKeypair {
    Integer secret;
    CurvePoint pub;   // secret * P on the base curve
    CurvePoint pub2;  // secret * Q0 on the extension curve (ordinary contexts only)
    bool has_pub2 = false;
};

BlsKeypair bls_keygen(const PairingContext& ctx, Rng& rng);
BlsKeypair bls_keygen(const PairingContext& ctx, const Integer& secret);
CurvePoint bls_sign(const PairingContext& ctx, const BlsKeypair& keys, const Bytes& message);
bool bls_verify(const PairingContext& ctx, const BlsKeypair& pub, const Bytes& message,
                const CurvePoint& signature, Rng& rng);

struct MovDemoResult {
    Integer planted;
    Integer recovered;
    Integer bsgs_direct;
    std::string dlp_pair;  // the (a, b) field pair with b = a^n, hex encoded
    bool ok = false;
};

MovDemoResult mov_demo(const PairingContext& ctx, const Integer& secret_n, Rng& rng);

// Supersingular context y^2 = x^3 + x over F_p, p = 3 mod 4, subgroup order r.
PairingContext supersingular_context(const Integer& p, const Integer& r,
                                     const Integer& naive_bound = Integer(1000000));

std::string joux_to_json(const JouxTranscript& t);
std::string mov_to_json(const MovDemoResult& m);

}  // namespace pfec
