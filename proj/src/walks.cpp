#include "kreweras/walks.hpp"

#include <sstream>
#include <stdexcept>

namespace kreweras {

WalkTable::WalkTable(int max_steps)
    : max_steps_(max_steps), side_(max_steps + 2), zero_(0) {
    data_.assign(static_cast<size_t>(max_steps_ + 1) * side_ * side_, Int(0));
    data_[idx(0, 0, 0)] = 1;
    for (int n = 1; n <= max_steps_; ++n) {
        for (int i = 0; i < side_; ++i) {
            for (int j = 0; j < side_; ++j) {
                Int v = 0;
                if (i + 1 < side_) v += data_[idx(n - 1, i + 1, j)];  // west step
                if (j + 1 < side_) v += data_[idx(n - 1, i, j + 1)];  // south step
                if (i > 0 && j > 0) v += data_[idx(n - 1, i - 1, j - 1)];
                data_[idx(n, i, j)] = v;
            }
        }
    }
}

const Int& WalkTable::count(int n, int i, int j) const {
    if (n < 0 || n > max_steps_) throw std::out_of_range("WalkTable: step count");
    if (i < 0 || j < 0 || i >= side_ || j >= side_) return zero_;
    return data_[idx(n, i, j)];
}

Int kreweras_count(const WalkTable& table, int n) { return table.count(n, 0, 0); }

Int axis_count(const WalkTable& table, int n, int i) { return table.count(n, i, 0); }

Int catalan(int n) {
    Int b = binomial(2 * n, n);
    Int q, r;
    divide_qr(b, Int(n + 1), q, r);
    if (r != 0) throw std::logic_error("catalan: non-exact division");
    return q;
}

Int square_lattice_count(int n) {
    int steps = 2 * n;
    int side = steps + 1;
    std::vector<Int> cur(static_cast<size_t>(side) * side, Int(0));
    std::vector<Int> next(cur.size(), Int(0));
    auto at = [side](std::vector<Int>& v, int i, int j) -> Int& {
        return v[static_cast<size_t>(i) * side + j];
    };
    at(cur, 0, 0) = 1;
    for (int s = 0; s < steps; ++s) {
        for (auto& v : next) v = 0;
        for (int i = 0; i < side; ++i) {
            for (int j = 0; j < side; ++j) {
                const Int& c = at(cur, i, j);
                if (c == 0) continue;
                if (i + 1 < side) at(next, i + 1, j) += c;
                if (i > 0) at(next, i - 1, j) += c;
                if (j + 1 < side) at(next, i, j + 1) += c;
                if (j > 0) at(next, i, j - 1) += c;
            }
        }
        cur.swap(next);
    }
    return at(cur, 0, 0);
}

std::string excursion_csv(const WalkTable& table, int max_n) {
    std::ostringstream os;
    os << "n,count\n";
    for (int n = 0; n <= max_n && 3 * n <= table.max_steps(); ++n)
        os << n << "," << kreweras_count(table, 3 * n).str() << "\n";
    return os.str();
}

}  // namespace kreweras
