#include "tg/realization.hpp"

#include <algorithm>
#include <cstdlib>

namespace tg {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) fail(errc::BadRange, "zero denominator in \"" + text + "\"");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        fail(errc::BadRange, "cannot parse rational \"" + text + "\"");
    } catch (const std::out_of_range&) {
        fail(errc::BadRange, "rational out of range \"" + text + "\"");
    }
}

std::string rational_str(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    return out;
}

RationalSet make_rational_set(std::vector<Rational> elems) {
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i - 1] == elems[i])
            fail(errc::BadRange, "duplicate element " + rational_str(elems[i]) + " in set");
    return elems;
}

RationalSet to_rational_set(const std::vector<int>& ints) {
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (int v : ints) out.emplace_back(v);
    return make_rational_set(std::move(out));
}

OrderType order_type_of(const RationalSet& X, const RationalSet& Y) {
    std::vector<std::uint8_t> marks;
    marks.reserve(X.size() + Y.size());
    std::size_t i = 0, j = 0;
    while (i < X.size() || j < Y.size()) {
        if (j == Y.size() || (i < X.size() && X[i] < Y[j])) {
            marks.push_back(1);
            ++i;
        } else if (i == X.size() || Y[j] < X[i]) {
            marks.push_back(2);
            ++j;
        } else {
            marks.push_back(3);
            ++i;
            ++j;
        }
    }
    return OrderType(std::move(marks));
}

OrderType order_type_of(const std::vector<int>& X, const std::vector<int>& Y) {
    return order_type_of(to_rational_set(X), to_rational_set(Y));
}

std::pair<RationalSet, RationalSet> canonical_realization(const OrderType& tau) {
    RationalSet X, Y;
    for (int i = 0; i < tau.length(); ++i) {
        const std::uint8_t d = tau.marks[std::size_t(i)];
        if (d != 2) X.emplace_back(i + 1);
        if (d != 1) Y.emplace_back(i + 1);
    }
    return {X, Y};
}

RationalSet extend_left(const OrderType& B, const RationalSet& Y) {
    if (int(Y.size()) != B.twos())
        fail(errc::SizeMismatch, "expected |Y| = " + std::to_string(B.twos()) + ", got " +
                                     std::to_string(Y.size()));
    RationalSet X;
    X.reserve(std::size_t(B.ones()));
    std::size_t yi = 0;
    int run = 0;
    const auto flush = [&](bool at_end) {
        if (run == 0) return;
        Rational left, right;
        if (Y.empty()) {  // no anchors at all: use consecutive integers
            left = Rational(0);
            right = Rational(run + 1);
        } else if (at_end) {
            left = Y[yi - 1];  // a 2/3-mark was consumed before any trailing 1s
            right = Y.back() + Rational(run + 1);
        } else if (yi == 0) {
            left = Y.front() - Rational(run + 1);
            right = Y.front();
        } else {
            left = Y[yi - 1];
            right = Y[yi];
        }
        const Rational step = (right - left) / Rational(run + 1);
        for (int j = 1; j <= run; ++j) X.push_back(left + step * Rational(j));
        run = 0;
    };
    for (std::uint8_t d : B.marks) {
        if (d == 1) {
            ++run;
            continue;
        }
        flush(/*at_end=*/false);
        if (d == 3) X.push_back(Y[yi]);
        ++yi;
    }
    flush(/*at_end=*/true);
    return X;
}

std::vector<std::vector<int>> rank_normalize(const std::vector<RationalSet>& sets) {
    std::vector<Rational> all;
    for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<int> ranks;
        ranks.reserve(s.size());
        for (const Rational& v : s)
            ranks.push_back(int(std::lower_bound(all.begin(), all.end(), v) - all.begin()) + 1);
        out.push_back(std::move(ranks));
    }
    return out;
}

}  // namespace tg
