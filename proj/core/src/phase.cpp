#include "dnc/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dnc {

const char* to_string(AngleMode mode) noexcept {
    return mode == AngleMode::exact ? "exact" : "numeric";
}

// ---------------------------------------------------------------------------
// AngleAssignment

AngleAssignment::AngleAssignment(int n, AngleMode mode) : n_(n), mode_(mode) {
    if (n < 0) throw std::invalid_argument("negative generator count");
}

void AngleAssignment::check_key(int i, int j) const {
    if (!(1 <= i && i < j && j <= n_))
        throw std::invalid_argument("angle key (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") must satisfy 1 <= i < j <= n");
}

AngleAssignment AngleAssignment::with(int i, int j, const mpq_class& phi) const {
    check_key(i, j);
    AngleAssignment r = *this;
    if (r.exact()) {
        if (sgn(phi) == 0) r.exact_.erase({i, j});
        else r.exact_[{i, j}] = phi;
    } else {
        r.numeric_[{i, j}] = phi.get_d();
    }
    return r;
}

AngleAssignment AngleAssignment::with(int i, int j, double phi) const {
    check_key(i, j);
    AngleAssignment r = to_numeric();
    r.numeric_[{i, j}] = phi;
    return r;
}

mpq_class AngleAssignment::exact_value(int i, int j) const {
    if (!exact()) throw std::logic_error("exact angle requested from a numeric assignment");
    auto it = exact_.find({i, j});
    return it == exact_.end() ? mpq_class(0) : it->second;
}

double AngleAssignment::value(int i, int j) const {
    if (exact()) {
        auto it = exact_.find({i, j});
        return it == exact_.end() ? 0.0 : it->second.get_d();
    }
    auto it = numeric_.find({i, j});
    return it == numeric_.end() ? 0.0 : it->second;
}

AngleAssignment AngleAssignment::canonical_branch() const {
    AngleAssignment r(n_, mode_);
    for (const auto& [key, phi] : exact_) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), phi.get_num_mpz_t(), phi.get_den_mpz_t());
        mpq_class red = phi - mpq_class(fl);
        if (sgn(red) != 0) r.exact_[key] = red;
    }
    for (const auto& [key, phi] : numeric_) r.numeric_[key] = phi - std::floor(phi);
    return r;
}

AngleAssignment AngleAssignment::shifted_branch(int i, int j, long shift) const {
    check_key(i, j);
    if (exact()) return with(i, j, exact_value(i, j) + shift);
    return with(i, j, value(i, j) + static_cast<double>(shift));
}

AngleAssignment AngleAssignment::resized(int n) const {
    AngleAssignment r(n, mode_);
    for (const auto& [key, phi] : exact_)
        if (key.second <= n) r.exact_[key] = phi;
    for (const auto& [key, phi] : numeric_)
        if (key.second <= n) r.numeric_[key] = phi;
    return r;
}

AngleAssignment AngleAssignment::to_numeric() const {
    if (!exact()) return *this;
    AngleAssignment r(n_, AngleMode::numeric);
    for (const auto& [key, phi] : exact_) r.numeric_[key] = phi.get_d();
    return r;
}

// ---------------------------------------------------------------------------
// Phase

namespace {

std::pair<std::int64_t, std::int64_t> reduce_turns(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    __int128 a = num, b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) return {0, 1};
    num /= a;
    den /= a;
    if (den > INT64_MAX) throw std::overflow_error("root-of-unity denominator overflow");
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

} // namespace

Phase Phase::w(int i, int j, std::int64_t k) {
    Phase p;
    if (i == j || k == 0) return p;
    if (i < 1 || j < 1) throw std::invalid_argument("generator indices are 1-based");
    if (i < j) p.entries_.push_back({i, j, k});
    else p.entries_.push_back({j, i, -k});
    return p;
}

Phase Phase::z(int i, int j, std::int64_t k) { return w(i, j, 2 * k); }

Phase Phase::root_of_unity(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Phase p;
    std::tie(p.turns_num_, p.turns_den_) = reduce_turns(num, den);
    return p;
}

std::int64_t Phase::exponent(int i, int j) const {
    if (i == j) return 0;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    for (const auto& e : entries_)
        if (e.i == i && e.j == j) return flip ? -e.exponent : e.exponent;
    return 0;
}

int Phase::max_index() const noexcept {
    int m = 0;
    for (const auto& e : entries_) m = std::max(m, e.j);
    return m;
}

Phase Phase::inverse() const { return pow(-1); }

Phase Phase::pow(std::int64_t k) const {
    Phase r;
    if (k == 0) return r;
    r.entries_ = entries_;
    for (auto& e : r.entries_) e.exponent *= k;
    std::tie(r.turns_num_, r.turns_den_) =
        reduce_turns(static_cast<__int128>(turns_num_) * k, turns_den_);
    return r;
}

Phase& Phase::operator*=(const Phase& other) {
    if (!other.entries_.empty()) {
        std::vector<Entry> merged;
        merged.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() ||
                (a != entries_.end() && std::pair(a->i, a->j) < std::pair(b->i, b->j))) {
                merged.push_back(*a++);
            } else if (a == entries_.end() || std::pair(b->i, b->j) < std::pair(a->i, a->j)) {
                merged.push_back(*b++);
            } else {
                std::int64_t s = a->exponent + b->exponent;
                if (s != 0) merged.push_back({a->i, a->j, s});
                ++a;
                ++b;
            }
        }
        entries_ = std::move(merged);
    }
    if (other.turns_num_ != 0) {
        std::tie(turns_num_, turns_den_) = reduce_turns(
            static_cast<__int128>(turns_num_) * other.turns_den_ +
                static_cast<__int128>(other.turns_num_) * turns_den_,
            static_cast<__int128>(turns_den_) * other.turns_den_);
    }
    return *this;
}

std::string Phase::to_string() const {
    if (is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << '*';
        first = false;
        os << "w[" << e.i << ',' << e.j << ']';
        if (e.exponent != 1) os << '^' << e.exponent;
    }
    if (turns_num_ != 0) {
        if (!first) os << '*';
        os << "r[" << turns_num_ << '/' << turns_den_ << ']';
    }
    return os.str();
}

Phase phase_mul(const Phase& a, const Phase& b) { return a * b; }
Phase phase_conj(const Phase& a) { return a.inverse(); }

PhaseValue phase_eval(const Phase& a, const AngleAssignment& angles) {
    if (a.max_index() > angles.n())
        throw std::invalid_argument("phase refers to generators beyond the angle assignment");
    constexpr double pi = std::numbers::pi;
    PhaseValue out;
    if (angles.exact()) {
        mpq_class r(2 * a.turns_num(), a.turns_den());
        r.canonicalize();
        for (const auto& e : a.entries()) r += mpq_class(e.exponent) * angles.exact_value(e.i, e.j);
        mpz_class fl;
        mpq_class half = r / 2;
        mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
        r -= 2 * mpq_class(fl);
        double x = r.get_d();
        out.value = {std::cos(pi * x), std::sin(pi * x)};
        out.half_turns = r;
    } else {
        double r = 2.0 * static_cast<double>(a.turns_num()) / static_cast<double>(a.turns_den());
        for (const auto& e : a.entries())
            r += static_cast<double>(e.exponent) * angles.value(e.i, e.j);
        r = std::fmod(r, 2.0);
        if (r < 0) r += 2.0;
        out.value = {std::cos(pi * r), std::sin(pi * r)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// PhasePolynomial

void PhasePolynomial::add_term(const Phase& p, const GaussianRational& c) {
    if (c.is_zero()) return;
    Phase key = p;
    GaussianRational coeff = c;
    if (p.turns_num() != 0) {
        // quarter = floor(4 r); fold i^quarter into the coefficient
        std::int64_t quarter = static_cast<std::int64_t>(
            (static_cast<__int128>(4) * p.turns_num()) / p.turns_den());
        if (quarter != 0) {
            key *= Phase::root_of_unity(-quarter, 4);
            static const GaussianRational units[4] = {
                GaussianRational(1), GaussianRational::i(), GaussianRational(-1), -GaussianRational::i()};
            coeff *= units[quarter % 4];
        }
    }
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<Phase> PhasePolynomial::as_phase() const {
    if (terms_.size() != 1 || !terms_.begin()->second.is_one()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<GaussianRational> PhasePolynomial::as_scalar() const {
    if (terms_.empty()) return GaussianRational(0);
    if (terms_.size() != 1 || !terms_.begin()->first.is_identity()) return std::nullopt;
    return terms_.begin()->second;
}

PhasePolynomial PhasePolynomial::conj() const {
    PhasePolynomial r;
    for (const auto& [p, c] : terms_) r.add_term(p.inverse(), c.conj());
    return r;
}

std::complex<double> PhasePolynomial::eval(const AngleAssignment& angles) const {
    std::complex<double> s = 0.0;
    for (const auto& [p, c] : terms_) s += c.to_complex() * phase_eval(p, angles).value;
    return s;
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PhasePolynomial& PhasePolynomial::operator*=(const PhasePolynomial& o) {
    PhasePolynomial r;
    for (const auto& [p1, c1] : terms_)
        for (const auto& [p2, c2] : o.terms_) r.add_term(p1 * p2, c1 * c2);
    return *this = std::move(r);
}

PhasePolynomial& PhasePolynomial::operator*=(const Phase& p) {
    if (p.is_identity()) return *this;
    PhasePolynomial r;
    for (const auto& [q, c] : terms_) r.add_term(q * p, c);
    return *this = std::move(r);
}

PhasePolynomial& PhasePolynomial::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
}

PhasePolynomial PhasePolynomial::operator-() const {
    PhasePolynomial r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

std::string PhasePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (p.is_identity()) out += c.to_string();
        else if (c.is_one()) out += p.to_string();
        else out += "(" + c.to_string() + ")*" + p.to_string();
    }
    return out;
}

} // namespace dnc
