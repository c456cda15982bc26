#include "latcone/bounds.hpp"

namespace latcone {

Int bpf_multiple(unsigned n) {
    if (n < 1) throw Error(Errc::MalformedInput, "dimension must be positive");
    return 2 * factorial(n + 2) * n;
}

Int cyclic_subgroup_bound(unsigned n, const Int& ln) {
    if (n < 1 || ln < 1) throw Error(Errc::MalformedInput, "arguments must be positive");
    Int m = bpf_multiple(n);
    Int base = int_pow(m, n) * ln;
    return int_pow(base, n + 1);
}

Int aut_group_bound(unsigned n, const Int& ln) {
    if (n < 1 || ln < 1) throw Error(Errc::MalformedInput, "arguments must be positive");
    Int m = bpf_multiple(n);
    Int base = int_pow(m, n) * ln;
    Int exp = Int(16) * n * int_pow(3, n);
    return int_pow(base, exp);
}

Int k3_aut_torsion_bound() { return int_pow(4, 484); }

Int gl_f3_order(unsigned rho) {
    if (rho < 1) throw Error(Errc::MalformedInput, "rank must be positive");
    Int p = 1;
    Int three_rho = int_pow(3, rho);
    for (unsigned i = 0; i < rho; ++i) p *= three_rho - int_pow(3, i);
    return p;
}

BoundReport bound_report(unsigned dimension, const Int& self_intersection, unsigned rank) {
    BoundReport report;
    report.entries.push_back({"bpf_multiple", bpf_multiple(dimension), "quoted: 2(n+2)!n"});
    report.entries.push_back({"cyclic_subgroup_bound",
                              cyclic_subgroup_bound(dimension, self_intersection),
                              "quoted: (m^n L^n)^(n+1)"});
    report.entries.push_back({"aut_group_bound", aut_group_bound(dimension, self_intersection),
                              "quoted: (m^n L^n)^(16 n 3^n)"});
    report.entries.push_back({"k3_aut_torsion_bound", k3_aut_torsion_bound(), "quoted: 4^(22^2)"});
    report.entries.push_back(
        {"gl_f3_order", gl_f3_order(rank), "assembled: #GL_rho(F_3) = prod (3^rho - 3^i)"});
    return report;
}

} // namespace latcone
