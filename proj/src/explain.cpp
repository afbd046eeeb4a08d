#include "orecode/explain.hpp"

#include <map>

#include "orecode/errors.hpp"

namespace orecode {

namespace {

const std::map<std::string, std::string>& subjects() {
    static const std::map<std::string, std::string> table = {
        {"skew-ring",
         "F_q[x;theta,im] twists multiplication by x*b = theta(b)*x + im(b), with\n"
         "theta(a) = a^{p^t} and the inner derivation im(a) = beta*(theta(a) - a).\n"
         "Scalars multiply polynomials untwisted from the left, so scaling a\n"
         "polynomial by a unit preserves left factorizations but not right ones."},
        {"division",
         "Right division: for g with unit leading coefficient, every f splits\n"
         "uniquely as f = q*g + r with r = 0 or deg r < deg g. The mirror left\n"
         "division writes f = g*q + r. `skew divmod` surfaces the right form;\n"
         "g right-divides f when the remainder vanishes."},
        {"cyclic",
         "A code of length n is skew-cyclic when it is a left submodule of\n"
         "F_q[x;theta,im]/<x^n - 1>, equivalently a subspace closed under the\n"
         "pseudo-linear map T(v)_j = theta(v_{j-1}) + im(v_j). Every such code is\n"
         "generated by a right divisor g of x^n - 1 of minimal degree and has\n"
         "dimension k = n - deg g; rows T^j(g), j < k, form a generator matrix."},
        {"membership",
         "With x^n-1 = h*g = g*h', a word c lies in <g> iff c(x)*h'(x) = 0 in the\n"
         "quotient by <x^n - 1>. The engine cross-checks this against a rank test\n"
         "on the generator matrix."},
        {"dual-containing",
         "With x^n-1 = h*g = g*h', the code <g> contains its Euclidean dual iff\n"
         "h'(x)*h'(x) is divisible by x^n - 1 from the right. For codes over\n"
         "R_{q,s} the condition must hold for every idempotent component. This is\n"
         "the admission ticket to the CSS construction."},
        {"decomposition",
         "R_{q,s} = F_q[v_1..v_s]/<v_i - v_i^2, v_i v_j = 0> splits through the\n"
         "orthogonal idempotents zeta_0 = prod(1 - v_i), zeta_j = v_j into s+1\n"
         "copies of F_q. A (gamma,delta)-cyclic code over R_{q,s} is exactly a\n"
         "direct sum zeta_0 C_0 + ... + zeta_s C_s of skew-cyclic codes over F_q,\n"
         "with |C| = q^{(s+1)n - sum deg g_i}."},
        {"gray",
         "phi maps R_{q,s}^n to F_q^{(s+1)n} by (t_0,...,t_s) -> (t_0,...,t_s)G\n"
         "per coordinate, for an invertible G with G*G^T = c*I, c != 0. phi is\n"
         "F_q-linear, injective, weight-transporting, and duality commutes:\n"
         "phi(C)^perp = phi(C^perp)."},
        {"distance",
         "d(C) is the minimum nonzero codeword weight. The column engine finds the\n"
         "smallest w with w linearly dependent parity-check columns, certifying\n"
         "d > w-1 by exhausting all (w-1)-subsets; the exhaustive engine\n"
         "enumerates all q^k codewords. Singleton: d <= n - k + 1, met with\n"
         "equality exactly for MDS codes."},
        {"css",
         "Classical codes C1, C2 with C1^perp inside C2 yield a quantum\n"
         "[[n, k1+k2-n, >= min(d1,d2)]]_q code with check matrix [H1 0; 0 H2].\n"
         "A dual-containing [n,k,d] code used for both sides gives [[n, 2k-n, d]]_q.\n"
         "For a dual-containing (gamma,delta)-cyclic code over R_{q,s} the Gray\n"
         "image gives [[(s+1)n, 2k - (s+1)n, d_H]]_q."},
        {"syndrome",
         "A stabilizer row [a|b] measures the basis error [kappa|chi] with\n"
         "eigenvalue phase omega^{Tr(a.chi - b.kappa)}, so the stored syndrome\n"
         "entry is Tr(a.chi - b.kappa) in F_p. X-part errors touch only H2 rows,\n"
         "Z-part errors only H1 rows. The alpha-expanded check matrix stacks\n"
         "alpha^i-scaled blocks so the F_p syndrome retains full q-ary information."},
        {"operators",
         "X(kappa)|theta> = |kappa + theta> and Z(chi)|theta> =\n"
         "omega^{Tr(chi theta)}|theta> generate the qudit error basis; they are\n"
         "unitary, add under composition, and obey the commutation rule\n"
         "Z(chi)X(kappa) = omega^{Tr(chi kappa)} X(kappa)Z(chi).\n"
         "`quantum verify-operators` checks all of this with dense matrices."},
        {"singleton",
         "Quantum Singleton bound: k + 2d <= n + 2 for any [[n,k,d]]_q code. The\n"
         "reproduction harness reports the slack n + 2 - k - 2d for every row."},
    };
    return table;
}

}  // namespace

std::string explain(const std::string& subject) {
    const auto& table = subjects();
    auto it = table.find(subject);
    if (it == table.end()) {
        std::string known;
        for (const auto& [key, _] : table) {
            if (!known.empty()) known += ", ";
            known += key;
        }
        throw UnknownSubject("'" + subject + "'; known subjects: " + known);
    }
    return it->second;
}

std::vector<std::string> explain_subjects() {
    std::vector<std::string> out;
    for (const auto& [key, _] : subjects()) out.push_back(key);
    return out;
}

}  // namespace orecode
