// End-to-end component classification: braid-orbit partitions of the tuple
// spaces under inner / absolute equivalence, certified against independent
// tuple counts, plus the reproduction checks for the published search
// procedures and the odd-parity bridge verification.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

struct GroupSel {
    enum class Kind : uint8_t { a6, g24, g60 };
    Kind kind = Kind::a6;

    static GroupSel a6() { return {Kind::a6}; }
    static GroupSel g24() { return {Kind::g24}; }
    static GroupSel g60() { return {Kind::g60}; }
    GroupFilter filter() const;
    const char* label() const;
};

struct ClassifyOptions {
    int workers = 0;  // 0 = default_workers()
    bool allow_k7 = false;
    bool allow_k8 = false;
    bool k7_full_scan = false;  // also certify k=7 by the full enumeration scan
};

struct OrbitRecord {
    uint64_t rep_key = 0;
    uint64_t size = 0;  // canonical states in this orbit
    int lift_exponent = 0;
    int lift_order = 1;
    int monodromy_order = 0;
    std::string representative;  // bit-exact cycle-notation tuple
};

struct OrbitReport {
    int k = 0;
    Canon mode = Canon::inner;
    std::string group_label;
    uint64_t total_tuples = 0;  // tuples with the selected monodromy
    uint64_t total_states = 0;  // canonical states discovered
    uint32_t orbit_count = 0;
    std::vector<OrbitRecord> orbits;  // ascending representative key
    std::string certification;        // "exact" or "partial: ..."
    double elapsed_ms = 0;            // envelope only, not part of the payload
};

// Partition all length-k tuples with the selected monodromy into braid
// orbits under the chosen canonicalization.  k in {5,6}; 7 and 8 must be
// opted in.  Inner mode is defined for the full monodromy group only.
OrbitReport classify(int k, Canon mode, GroupSel group, const ClassifyOptions& opt = {});

// The five-point strata: monodromy orders 24, 60 and 360 under absolute
// equivalence, each expected to form a single orbit; also checks that no
// other transitive monodromy occurs
std::vector<OrbitReport> classify_five_subgroups(const ClassifyOptions& opt = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0;
};

struct ReproduceOptions {
    int workers = 0;
    // braid search depths used by the published case analyses
    int depth_b4 = 2;
    int depth_b5 = 10;
    int depth_b6 = 10;
    int depth_b8 = 5;
    int depth_b9 = 1;
};

// re-run the named exhaustive searches; codes: "b3","b4","b5","b6","b8","b9","all"
std::vector<CheckResult> reproduce(const std::vector<std::string>& codes,
                                   const ReproduceOptions& opt = {});

// the two explicit odd-conjugation bridge checks for six branch points
CheckResult verify_inner_parity_bridges();

struct VerifyOptions {
    int workers = 0;
    uint64_t seed = 12345;
    int braid_samples = 1000;
    int conj_samples = 25;
    int reduction_samples = 1000;
    int lift_pairs = 100;
};

// the seeded property suite (braid/inner/absolute invariance, reduction
// invariance, equivalence lifting round-trips, determinism, bridges)
std::vector<CheckResult> verify_properties(const VerifyOptions& opt = {});

// deterministic serialized payload used for byte-identity comparisons
std::string payload_string(const OrbitReport& r);

}  // namespace hurwitz
