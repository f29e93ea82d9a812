#include "hurwitz/report.hpp"

#include <sstream>

namespace hurwitz {

using nlohmann::ordered_json;

namespace {

const char* mode_name(Canon m) {
    switch (m) {
        case Canon::inner:
            return "inner";
        case Canon::abs:
            return "abs";
        default:
            return "none";
    }
}

}  // namespace

ordered_json report_to_json(const OrbitReport& r) {
    ordered_json j;
    j["k"] = r.k;
    j["mode"] = mode_name(r.mode);
    j["group"] = r.group_label;
    j["total_tuples"] = r.total_tuples;
    j["total_states"] = r.total_states;
    j["orbit_count"] = r.orbit_count;
    j["certification"] = r.certification;
    ordered_json orbits = ordered_json::array();
    for (const auto& o : r.orbits) {
        ordered_json jo;
        jo["size"] = o.size;
        jo["lift_exponent"] = o.lift_exponent;
        jo["lift_order"] = o.lift_order;
        jo["monodromy_order"] = o.monodromy_order;
        jo["representative"] = o.representative;
        orbits.push_back(jo);
    }
    j["orbits"] = orbits;
    return j;
}

std::string report_to_csv(const OrbitReport& r) {
    std::ostringstream s;
    s << "k,mode,orbit_index,size,lift_exponent,lift_order,monodromy_order,representative\n";
    for (size_t i = 0; i < r.orbits.size(); ++i) {
        const auto& o = r.orbits[i];
        s << r.k << ',' << mode_name(r.mode) << ',' << i << ',' << o.size << ','
          << o.lift_exponent << ',' << o.lift_order << ',' << o.monodromy_order << ",\""
          << o.representative << "\"\n";
    }
    return s.str();
}

std::string report_to_text(const OrbitReport& r) {
    std::ostringstream s;
    s << "k=" << r.k << " mode=" << mode_name(r.mode) << " group=" << r.group_label
      << "  tuples=" << r.total_tuples << " states=" << r.total_states
      << " orbits=" << r.orbit_count << "\ncertification: " << r.certification << "\n";
    for (size_t i = 0; i < r.orbits.size(); ++i) {
        const auto& o = r.orbits[i];
        s << "  orbit " << i << ": size=" << o.size << " lift_exponent=" << o.lift_exponent
          << " lift_order=" << o.lift_order << " monodromy_order=" << o.monodromy_order
          << "\n    representative: " << o.representative << "\n";
    }
    return s.str();
}

ordered_json checks_to_json(const std::vector<CheckResult>& cs) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cs) {
        ordered_json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

std::string checks_to_csv(const std::vector<CheckResult>& cs) {
    std::ostringstream s;
    s << "name,pass,detail\n";
    for (const auto& c : cs) s << c.name << ',' << (c.pass ? 1 : 0) << ",\"" << c.detail << "\"\n";
    return s.str();
}

std::string checks_to_text(const std::vector<CheckResult>& cs) {
    std::ostringstream s;
    for (const auto& c : cs)
        s << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    return s.str();
}

}  // namespace hurwitz
