#include "tg/order_type.hpp"

#include <algorithm>

namespace tg {

OrderType::OrderType(std::vector<std::uint8_t> m) : marks(std::move(m)) {
    for (std::uint8_t d : marks)
        if (d < 1 || d > 3) fail(errc::InvalidDigit, "mark value " + std::to_string(int(d)));
}

int OrderType::ones() const {
    int c = 0;
    for (std::uint8_t d : marks) c += (d != 2);
    return c;
}

int OrderType::twos() const {
    int c = 0;
    for (std::uint8_t d : marks) c += (d != 1);
    return c;
}

int OrderType::width() const {
    if (!is_type()) fail(errc::NotAType, "unbalanced mark sequence " + str());
    return twos();
}

bool OrderType::trivial() const {
    return std::all_of(marks.begin(), marks.end(), [](std::uint8_t d) { return d == 3; });
}

std::string OrderType::str() const {
    std::string out;
    out.reserve(marks.size());
    for (std::uint8_t d : marks) out.push_back(char('0' + d));
    return out;
}

OrderType parse_marks(const std::string& digits) {
    std::vector<std::uint8_t> m;
    m.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '3') fail(errc::InvalidDigit, std::string("character '") + c + "' in \"" + digits + "\"");
        m.push_back(std::uint8_t(c - '0'));
    }
    return OrderType(std::move(m));
}

OrderType parse_type(const std::string& digits) {
    OrderType t = parse_marks(digits);
    if (!t.is_type())
        fail(errc::NotAType, "\"" + digits + "\" has " + std::to_string(t.ones()) + " {1,3}-marks but " +
                                 std::to_string(t.twos()) + " {2,3}-marks");
    return t;
}

std::pair<int, int> marks_count(const OrderType& seq) { return {seq.ones(), seq.twos()}; }

OrderType dual(const OrderType& tau) {
    OrderType out = tau;
    for (std::uint8_t& d : out.marks)
        if (d != 3) d = std::uint8_t(3 - d);
    return out;
}

OrderType concat(const OrderType& a, const OrderType& b) {
    OrderType out = a;
    out.marks.insert(out.marks.end(), b.marks.begin(), b.marks.end());
    return out;
}

std::vector<OrderType> factorize(const OrderType& tau) {
    if (tau.length() == 0) fail(errc::NotAType, "cannot factorise the empty type");
    if (!tau.is_type()) fail(errc::NotAType, "cannot factorise unbalanced sequence " + tau.str());
    std::vector<OrderType> factors;
    std::vector<std::uint8_t> cur;
    int balance = 0;  // #1-marks minus #2-marks of the open factor (3s cancel)
    for (std::uint8_t d : tau.marks) {
        cur.push_back(d);
        if (d == 1) ++balance;
        if (d == 2) --balance;
        if (balance == 0) {
            factors.emplace_back(std::move(cur));
            cur.clear();
        }
    }
    return factors;  // balance returns to 0 at the end, so cur is empty here
}

bool is_irreducible(const OrderType& tau) { return factorize(tau).size() == 1; }

OrderType sigma(int k) {
    if (k < 2) fail(errc::BadWidth, "sigma(k) needs k >= 2, got " + std::to_string(k));
    std::vector<std::uint8_t> m(std::size_t(k) + 1, 3);
    m.front() = 1;
    m.back() = 2;
    return OrderType(std::move(m));
}

namespace {

// Rules for a primary irreducible type: B_1 = all initial 1s; afterwards each
// block grabs marks until its {2,3}-count matches the {1,3}-count of the
// previous block, then greedily extends over any following 1s (appending a 1
// never raises the {2,3}-count, so this keeps the block maximal).
std::vector<OrderType> primary_blocks(const OrderType& tau) {
    const auto& m = tau.marks;
    const int len = tau.length();
    std::vector<OrderType> blocks;
    int pos = 0;
    while (pos < len && m[pos] == 1) ++pos;
    blocks.emplace_back(std::vector<std::uint8_t>(m.begin(), m.begin() + pos));
    while (pos < len) {
        const int target = blocks.back().ones();
        const int start = pos;
        int got = 0;
        while (pos < len && got < target) {
            if (m[pos] != 1) ++got;
            ++pos;
        }
        if (got != target)
            fail(errc::NotIrreducible, "block structure of " + tau.str() + " is inconsistent");
        while (pos < len && m[pos] == 1) ++pos;
        blocks.emplace_back(std::vector<std::uint8_t>(m.begin() + start, m.begin() + pos));
    }
    return blocks;
}

}  // namespace

BlockDecomposition block_decompose(const OrderType& tau) {
    if (tau.length() == 0) fail(errc::NotIrreducible, "empty type has no blocks");
    if (!tau.is_type()) fail(errc::NotAType, "unbalanced mark sequence " + tau.str());
    if (!is_irreducible(tau)) fail(errc::NotIrreducible, tau.str() + " is a concatenation of types");

    BlockDecomposition dec;
    if (tau.trivial()) {  // irreducible and trivial means the single mark "3"
        dec.blocks = {tau};
        dec.polarity = Polarity::trivial;
    } else if (tau.marks.front() == 1) {
        dec.blocks = primary_blocks(tau);
        dec.polarity = Polarity::primary;
    } else {
        dec.blocks = primary_blocks(dual(tau));
        for (OrderType& blk : dec.blocks) blk = dual(blk);
        dec.polarity = Polarity::secondary;
    }
    dec.s.reserve(dec.blocks.size());
    int acc = 0;
    for (const OrderType& blk : dec.blocks) {
        acc += blk.twos();
        dec.s.push_back(acc);
    }
    return dec;
}

}  // namespace tg
