#include "flopcalc/bwb.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "flopcalc/errors.hpp"

namespace flopcalc::bwb {

namespace {

std::vector<long long> rho(int size) {
    // (size-1, ..., 1, 0)
    std::vector<long long> r(size);
    for (int i = 0; i < size; ++i) {
        r[i] = size - 1 - i;
    }
    return r;
}

bool has_repeat(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

// Number of transpositions needed to sort v strictly decreasing.
int inversions(const std::vector<long long>& v) {
    int count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] < v[j]) {
                ++count;
            }
        }
    }
    return count;
}

void require_same_n(int a, int b) {
    if (a != b) {
        throw InvalidArgument("bundles live on P^" + std::to_string(a) + " and P^" + std::to_string(b));
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

int parse_int_token(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidArgument("invalid integer '" + std::string(token) + "' in weight literal");
    }
    return value;
}

void fill_tableaux(const std::vector<int>& shape, int n, std::vector<std::vector<int>>& rows,
                   std::size_t r, std::size_t c, std::vector<int>& content,
                   std::vector<std::vector<int>>& out) {
    if (r == shape.size()) {
        out.push_back(content);
        return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
        fill_tableaux(shape, n, rows, r + 1, 0, content, out);
        return;
    }
    int lo = 1;
    if (c > 0) {
        lo = std::max(lo, rows[r][c - 1]);
    }
    if (r > 0) {
        lo = std::max(lo, rows[r - 1][c] + 1);
    }
    // Column strictness needs room below: the entry in row r is at most n - (rows beneath in column c).
    int below = 0;
    for (std::size_t rr = r + 1; rr < shape.size() && static_cast<std::size_t>(shape[rr]) > c; ++rr) {
        ++below;
    }
    for (int v = lo; v <= n - below; ++v) {
        rows[r][c] = v;
        ++content[v - 1];
        fill_tableaux(shape, n, rows, r, c + 1, content, out);
        --content[v - 1];
    }
}

}  // namespace

LeviWeight::LeviWeight(std::vector<int> lambda, int t) : lambda_(std::move(lambda)), t_(t) {
    if (lambda_.empty()) {
        throw InvalidArgument("a Levi weight needs n >= 1 entries");
    }
    for (std::size_t i = 0; i + 1 < lambda_.size(); ++i) {
        if (lambda_[i] < lambda_[i + 1]) {
            throw InvalidArgument("weight " + to_string() + " is not non-increasing");
        }
    }
}

std::vector<long long> LeviWeight::alpha() const {
    std::vector<long long> a(lambda_.begin(), lambda_.end());
    a.push_back(t_);
    return a;
}

LeviWeight LeviWeight::normalized() const {
    const int shift = lambda_.back();
    std::vector<int> lam = lambda_;
    for (auto& x : lam) {
        x -= shift;
    }
    return LeviWeight(std::move(lam), t_ - shift);
}

Integer LeviWeight::rank() const {
    return weyl_dimension(std::vector<long long>(lambda_.begin(), lambda_.end()));
}

bool operator==(const LeviWeight& a, const LeviWeight& b) {
    const LeviWeight na = a.normalized();
    const LeviWeight nb = b.normalized();
    return na.lambda_ == nb.lambda_ && na.t_ == nb.t_;
}

std::strong_ordering operator<=>(const LeviWeight& a, const LeviWeight& b) {
    const LeviWeight na = a.normalized();
    const LeviWeight nb = b.normalized();
    if (auto c = na.lambda_ <=> nb.lambda_; c != 0) {
        return c;
    }
    return na.t_ <=> nb.t_;
}

std::string LeviWeight::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (i > 0) {
            os << ',';
        }
        os << lambda_[i];
    }
    os << '|' << t_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LeviWeight& w) { return os << w.to_string(); }

LeviWeight parse_weight(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw InvalidArgument("weight literal '" + std::string(text) + "' must have the form l1,...,ln|t");
    }
    std::vector<int> lambda;
    std::string_view head = text.substr(0, bar);
    while (true) {
        const auto comma = head.find(',');
        lambda.push_back(parse_int_token(head.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        head.remove_prefix(comma + 1);
    }
    const int t = parse_int_token(text.substr(bar + 1));
    return LeviWeight(std::move(lambda), t);
}

HomogeneousBundle::HomogeneousBundle(int n) : n_(n) {
    if (n < 1) {
        throw InvalidArgument("P^n needs n >= 1, got " + std::to_string(n));
    }
}

HomogeneousBundle::HomogeneousBundle(int n, std::vector<LeviWeight> summands) : HomogeneousBundle(n) {
    for (auto& w : summands) {
        add(w);
    }
}

void HomogeneousBundle::add(const LeviWeight& w) {
    require_same_n(n_, w.n());
    summands_.push_back(w);
}

void HomogeneousBundle::add(const HomogeneousBundle& other) {
    require_same_n(n_, other.n_);
    summands_.insert(summands_.end(), other.summands_.begin(), other.summands_.end());
}

Integer HomogeneousBundle::rank() const {
    Integer r = 0;
    for (const auto& w : summands_) {
        r += w.rank();
    }
    return r;
}

std::vector<LeviWeight> HomogeneousBundle::sorted_summands() const {
    std::vector<LeviWeight> out;
    out.reserve(summands_.size());
    for (const auto& w : summands_) {
        out.push_back(w.normalized());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer weyl_dimension(const std::vector<long long>& mu) {
    Integer num = 1;
    Integer den = 1;
    const auto size = mu.size();
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            num *= mu[i] - mu[j] + static_cast<long long>(j - i);
            den *= static_cast<long long>(j - i);
        }
    }
    if (num % den != 0) {
        throw std::logic_error("Weyl dimension did not reduce to an integer");
    }
    return num / den;
}

CohomologyTable bott_cohomology(const LeviWeight& w) {
    const int size = w.n() + 1;
    std::vector<long long> beta = w.alpha();
    const auto r = rho(size);
    for (int i = 0; i < size; ++i) {
        beta[i] += r[i];
    }
    CohomologyTable table;
    if (has_repeat(beta)) {
        return table;
    }
    const int degree = inversions(beta);
    std::sort(beta.begin(), beta.end(), std::greater<>());
    for (int i = 0; i < size; ++i) {
        beta[i] -= r[i];
    }
    table.add(degree, weyl_dimension(beta));
    return table;
}

CohomologyTable cohomology_sum(const HomogeneousBundle& b) {
    CohomologyTable total;
    for (const auto& w : b.summands()) {
        total += bott_cohomology(w);
    }
    return total;
}

LeviWeight twist(const LeviWeight& w, int m) { return LeviWeight(w.lambda(), w.t() - m); }

HomogeneousBundle twist(const HomogeneousBundle& b, int m) {
    HomogeneousBundle out(b.n());
    for (const auto& w : b.summands()) {
        out.add(twist(w, m));
    }
    return out;
}

LeviWeight dual(const LeviWeight& w) {
    std::vector<int> lam(w.lambda().rbegin(), w.lambda().rend());
    for (auto& x : lam) {
        x = -x;
    }
    return LeviWeight(std::move(lam), -w.t());
}

HomogeneousBundle dual(const HomogeneousBundle& b) {
    HomogeneousBundle out(b.n());
    for (const auto& w : b.summands()) {
        out.add(dual(w));
    }
    return out;
}

LeviWeight serre_dual(const LeviWeight& w) { return twist(dual(w), -(w.n() + 1)); }

HomogeneousBundle sym_power_decompose(int l, int n) {
    if (l < 0) {
        throw InvalidArgument("symmetric power exponent must be non-negative, got " + std::to_string(l));
    }
    HomogeneousBundle out(n);
    for (int a = 0; a <= l; ++a) {
        std::vector<int> lam(n, 0);
        lam[0] = a;
        out.add(LeviWeight(std::move(lam), -a));
    }
    return out;
}

LeviWeight exterior_power_theta(int p, int n) {
    if (n < 1 || p < 0 || p > n) {
        throw RangeError("exterior power Lambda^" + std::to_string(p) + " Theta needs 0 <= p <= n = " +
                         std::to_string(n));
    }
    std::vector<int> lam(n, 0);
    std::fill(lam.begin(), lam.begin() + p, 1);
    return LeviWeight(std::move(lam), -p);
}

LeviWeight omega(int p, int n) {
    if (p < 0 || p > n) {
        throw RangeError("Omega^" + std::to_string(p) + " needs 0 <= p <= n = " + std::to_string(n));
    }
    return twist(exterior_power_theta(n - p, n), -(n + 1));
}

LeviWeight line_bundle(int n, int degree) { return LeviWeight(std::vector<int>(n, 0), -degree); }

LeviWeight tangent_bundle(int n) { return exterior_power_theta(1, n); }

std::vector<std::vector<int>> gl_weights(const std::vector<int>& lambda) {
    const int n = static_cast<int>(lambda.size());
    const int shift = lambda.back();
    std::vector<int> shape;
    for (int x : lambda) {
        if (x - shift > 0) {
            shape.push_back(x - shift);
        }
    }
    std::vector<std::vector<int>> rows;
    for (int len : shape) {
        rows.emplace_back(len, 0);
    }
    std::vector<int> content(n, 0);
    std::vector<std::vector<int>> out;
    fill_tableaux(shape, n, rows, 0, 0, content, out);
    for (auto& wt : out) {
        for (auto& x : wt) {
            x += shift;
        }
    }
    return out;
}

HomogeneousBundle tensor(const LeviWeight& a, const LeviWeight& b) {
    require_same_n(a.n(), b.n());
    const int n = a.n();
    // Enumerate the weights of the smaller factor and reflect the other into the dominant chamber.
    const bool a_small = a.rank() <= b.rank();
    const LeviWeight& small = a_small ? a : b;
    const LeviWeight& big = a_small ? b : a;
    const auto r = rho(n);
    std::map<std::vector<long long>, long long> signed_mult;
    for (const auto& nu : gl_weights(small.lambda())) {
        std::vector<long long> v(n);
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<long long>(big.lambda()[i]) + nu[i] + r[i];
        }
        if (has_repeat(v)) {
            continue;
        }
        const int sign = inversions(v) % 2 == 0 ? 1 : -1;
        std::sort(v.begin(), v.end(), std::greater<>());
        for (int i = 0; i < n; ++i) {
            v[i] -= r[i];
        }
        signed_mult[v] += sign;
    }
    HomogeneousBundle out(n);
    const int t = a.t() + b.t();
    for (const auto& [hw, mult] : signed_mult) {
        if (mult < 0) {
            throw std::logic_error("negative multiplicity in tensor product decomposition");
        }
        std::vector<int> lam(hw.begin(), hw.end());
        for (long long k = 0; k < mult; ++k) {
            out.add(LeviWeight(lam, t));
        }
    }
    return out;
}

HomogeneousBundle tensor(const HomogeneousBundle& a, const HomogeneousBundle& b) {
    require_same_n(a.n(), b.n());
    HomogeneousBundle out(a.n());
    for (const auto& x : a.summands()) {
        for (const auto& y : b.summands()) {
            out.add(tensor(x, y));
        }
    }
    return out;
}

}  // namespace flopcalc::bwb
