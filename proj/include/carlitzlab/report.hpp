#ifndef CARLITZLAB_REPORT_HPP
#define CARLITZLAB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "carlitzlab/cogalois.hpp"
#include "carlitzlab/textio.hpp"

namespace carlitzlab {

using Json = nlohmann::ordered_json;

/// Big integers rendered exactly, plus a (base, exp) pair when the value is
/// a pure power of q.
inline Json render_order(const BigInt& v, std::uint64_t q) {
    Json j;
    j["value"] = to_string(v);
    if (auto e = exact_log(v, BigInt(q))) {
        j["pow"] = Json{{"base", q}, {"exp", *e}};
    }
    return j;
}

inline Json subgroup_to_json(const Subgroup& h) {
    Json lifts = Json::array();
    for (const Poly& a : h.elements()) lifts.push_back(to_text(a));
    return lifts;
}

/// The per-subextension report: one fixed schema shared by the CLI commands
/// and the verification suites.
inline Json subext_report(const SubextSpec& s) {
    const std::uint64_t q = s.E->spec()->q();
    Json j;
    j["ambient_M"] = to_text(s.E->level());
    j["H_upper"] = subgroup_to_json(s.h_upper);
    j["H_lower"] = subgroup_to_json(s.h_lower);
    j["degree"] = s.degree();
    j["mu_L"] = to_text(mu_of_fixed_field(s.E, s.h_lower));
    j["mu_K"] = to_text(mu_of_fixed_field(s.E, s.h_upper));
    j["pure"] = purity_check(s);
    bool radical = is_radical(s);
    j["radical"] = radical;
    bool rc = radical && (s.degree() == 1 || is_p_power(s.degree(), s.E->spec()->p()));
    if (rc && !purity_check(s))
        throw std::logic_error("radical cyclotomic subextension failed the purity check");
    j["radical_cyclotomic"] = rc;
    j["cog_order"] = render_order(cog_order(s), q);
    if (rc) {
        BoundCheck bc = bound_check(s);
        j["bound"] = render_order(bc.bound, q);
        j["bound_ok"] = bc.ok;
    } else {
        j["bound"] = nullptr;
        j["bound_ok"] = nullptr;
    }
    return j;
}

}  // namespace carlitzlab

#endif
