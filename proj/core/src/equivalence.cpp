#include "dirseq/equivalence.hpp"

#include <algorithm>

namespace dirseq {

namespace {

// Full period of a halfperiod: rows rho_0..rho_{2h-1}.
std::vector<Row> full_period(const HalfPeriod& s) {
    const int h = s.length();
    std::vector<Row> rho;
    rho.reserve(static_cast<std::size_t>(2 * h));
    for (int m = 0; m < h; ++m) rho.push_back(s.row(m));
    for (int m = 0; m < h; ++m) {
        Row r = s.row(m);
        std::reverse(r.begin(), r.end());
        rho.push_back(std::move(r));
    }
    return rho;
}

Row transformed_row(const std::vector<Row>& rho, int shift, bool tr, bool mir, int m) {
    const int period = static_cast<int>(rho.size());
    int idx = tr ? shift - m : shift + m;
    idx = ((idx % period) + period) % period;
    Row r = rho[static_cast<std::size_t>(idx)];
    if (mir) std::reverse(r.begin(), r.end());
    return r;
}

}  // namespace

std::optional<EquivWitness> equivalent(const HalfPeriod& a, const HalfPeriod& b) {
    return equivalent_under(a, b, true, true);
}

std::optional<EquivWitness> equivalent_under(const HalfPeriod& a, const HalfPeriod& b,
                                             bool allow_time_reversal, bool allow_mirror) {
    if (a.size() != b.size())
        fail("SizeMismatch", "sequences have " + std::to_string(a.size()) + " and " +
                                 std::to_string(b.size()) + " points");
    if (a.length() != b.length()) return std::nullopt;

    const int n = a.size();
    const int period = 2 * a.length();
    const auto rho_a = full_period(a);
    const auto rho_b = full_period(b);

    for (int tr = 0; tr <= (allow_time_reversal ? 1 : 0); ++tr) {
        for (int mir = 0; mir <= (allow_mirror ? 1 : 0); ++mir) {
            for (int shift = 0; shift < period; ++shift) {
                // The bijection is forced by matching row 0 position-wise.
                Row c0 = transformed_row(rho_a, shift, tr, mir, 0);
                std::map<Label, Label> relabel;
                for (int i = 0; i < n; ++i)
                    relabel[c0[static_cast<std::size_t>(i)]] =
                        rho_b[0][static_cast<std::size_t>(i)];
                bool ok = true;
                for (int m = 1; m < period && ok; ++m) {
                    Row cm = transformed_row(rho_a, shift, tr, mir, m);
                    const Row& bm = rho_b[static_cast<std::size_t>(m)];
                    for (int i = 0; i < n; ++i) {
                        if (relabel.at(cm[static_cast<std::size_t>(i)]) !=
                            bm[static_cast<std::size_t>(i)]) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok)
                    return EquivWitness{std::move(relabel), shift, tr != 0, mir != 0};
            }
        }
    }
    return std::nullopt;
}

HalfPeriod apply_witness(const HalfPeriod& a, const EquivWitness& w) {
    const auto rho_a = full_period(a);
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(a.length()) + 1);
    for (int m = 0; m <= a.length(); ++m) {
        Row r = transformed_row(rho_a, w.shift, w.time_reversed, w.mirrored, m);
        for (Label& p : r) p = w.relabel.at(p);
        rows.push_back(std::move(r));
    }
    return validated(rows);
}

}  // namespace dirseq
