// Classifies a few bundles, prints the unique tableau of a rank-one case and
// its level-one decomposition.

#include <iostream>

#include "qkostka/qkostka.hpp"

using namespace qkostka;

int main() {
    for (const BundleSpec& spec : {BundleSpec{1, 6, {6, 6, 5, 5, 5, 2, 1}}, BundleSpec{1, 10, {10, 8, 8, 7, 6, 3, 1, 1}},
                                   BundleSpec{1, 2, {2, 2, 2}}, BundleSpec{2, 9, {9, 8, 8, 8, 8, 8, 8, 2, 1}}}) {
        Classification c = classify(spec);
        std::cout << "sl" << 2 * spec.m << " level " << spec.level << " " << Content(spec.weights).to_string() << ": "
                  << to_string(c.rank_class) << " (" << to_string(c.reason) << ", k=" << c.certificate.k
                  << ", p=" << c.certificate.p << ", tail=" << c.certificate.tail_sum << ")\n";
    }

    BundleSpec spec{1, 6, {6, 6, 5, 5, 5, 2, 1}};
    Certificate c = classify(spec).certificate;
    Tableau t = combined_fill(spec.level, c.k, c.p, Content(spec.weights));
    std::cout << "\nunique tableau, " << rank_exact(spec) << " in total\n" << render_text(t);

    VerificationReport r = verify_decomposition(spec);
    std::cout << "\nc_1 = " << r.combo.to_string() << "\nchecked on " << r.checks.size() << " F-curves, "
              << r.violations() << " violations\n";
}
