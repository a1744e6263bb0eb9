#include "fg/primitivity.hpp"

#include <cmath>
#include <stdexcept>

namespace fg {

double shpilrain_threshold(int n, int r) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (r < 2) throw std::invalid_argument("threshold requires rank >= 2");
    const double num = 4.0 * std::log(static_cast<double>(n)) + 6.0 * std::log(static_cast<double>(r));
    return static_cast<double>(n) - num / std::log(static_cast<double>(2 * r - 1));
}

PrimitivityReport is_primitive_shpilrain(const Word& u, const Alphabet& alphabet) {
    PrimitivityReport rep;
    const Word core = cyclic_core(u).core;
    const int h = static_cast<int>(core.length());
    const int n = static_cast<int>(u.length());

    // Cores of length <= 2 carry too little for the graph obstruction; the
    // threshold comparison h <= g(n) never fires when g(n) is negative.
    if (h <= 2 || (alphabet.rank >= 2 && static_cast<double>(h) <= shpilrain_threshold(n, alphabet.rank))) {
        rep.route = PrimitivityReport::Route::short_core;
        rep.primitive = is_primitive_whitehead(core, alphabet);
        return rep;
    }

    WhiteheadGraph w(alphabet.rank);
    for (int i = 2; i <= h + 1; ++i) {
        // Steps i = 2..h insert the pair edges; step h+1 inserts the
        // wrap-around edge (x_h, x_1^-1).
        const Letter x = core[static_cast<std::size_t>((i - 1) % h == 0 ? 0 : i - 1)];
        const Letter prev = core[static_cast<std::size_t>(i - 2)];
        w.add_edge(prev, inverse(x));
        ++rep.edges_added;
        ++rep.cutvertex_checks;
        if (connected_without_cutvertex(w)) {
            rep.route = PrimitivityReport::Route::obstruction;
            rep.obstruction_step = i;
            rep.primitive = false;
            return rep;
        }
    }

    rep.route = PrimitivityReport::Route::whitehead_fallback;
    rep.primitive = is_primitive_whitehead(core, alphabet);
    return rep;
}

RPrimReport relative_primitivity(const Word& w0, const std::vector<Word>& tuple,
                                 const DepthPolicy& policy, const Alphabet& alphabet) {
    RPrimReport rep;
    MembershipReport mem = membership_mpd(w0, tuple, policy, alphabet);
    rep.member = mem.member;
    rep.membership_path = mem.path;
    rep.basis = std::move(mem.basis);
    if (!mem.member) return rep;
    rep.expression = std::move(mem.expression);

    // Primitivity of w0 in H = primitivity of x_0 in the free group on the
    // basis; a rank-0 basis only contains the identity, never primitive.
    const int subgroup_rank = static_cast<int>(rep.basis.size());
    if (subgroup_rank == 0 || rep.expression->empty()) {
        rep.primitive_in_subgroup = false;
        return rep;
    }
    const Alphabet basis_alphabet(subgroup_rank);
    PrimitivityReport prim = is_primitive_shpilrain(*rep.expression, basis_alphabet);
    rep.primitive_in_subgroup = prim.primitive;
    rep.primitivity = prim;
    return rep;
}

}  // namespace fg
