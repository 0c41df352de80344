#include "whrt/sequences.hpp"

#include <algorithm>
#include <bit>

namespace whrt {

namespace {

__extension__ typedef unsigned __int128 u128;

u128 pow10(int e) {
    u128 r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

std::string to_decimal_digits(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

// Bit j of `bits` is the outcome of job j (1 = hit). True iff every window of
// `window` consecutive jobs among the first `length` holds at most `bound` misses.
bool misses_within(std::uint32_t bits, std::uint32_t length, std::uint32_t bound,
                   std::uint32_t window) {
    const std::uint32_t mask = window >= 32 ? ~0u : (1u << window) - 1u;
    for (std::uint32_t start = 0; start + window <= length; ++start) {
        const auto hits = static_cast<std::uint32_t>(std::popcount((bits >> start) & mask));
        if (window - hits > bound) return false;
    }
    return true;
}

void check_window(const WeaklyHardConstraint& c, std::uint32_t limit) {
    if (c.window() > limit) {
        throw Error(ErrorCode::WindowTooLarge,
                    "window K=" + std::to_string(c.window()) + " exceeds enumeration bound " +
                        std::to_string(limit));
    }
}

}  // namespace

DeadlineSequence DeadlineSequence::parse(std::string_view bits) {
    std::vector<Outcome> out;
    out.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        switch (bits[i]) {
            case '1': out.push_back(Outcome::Hit); break;
            case '0': out.push_back(Outcome::Miss); break;
            default:
                throw Error(ErrorCode::ParseError, "deadline sequence character " +
                                                       std::to_string(i) + " is not 0 or 1");
        }
    }
    return DeadlineSequence(std::move(out));
}

std::size_t DeadlineSequence::misses() const noexcept {
    return static_cast<std::size_t>(std::count(outcomes_.begin(), outcomes_.end(), Outcome::Miss));
}

std::string DeadlineSequence::to_string() const {
    std::string s;
    s.reserve(outcomes_.size());
    for (auto o : outcomes_) s.push_back(o == Outcome::Hit ? '1' : '0');
    return s;
}

bool satisfies(const DeadlineSequence& seq, ConstraintKind kind, std::uint32_t bound,
               std::uint32_t window) {
    if (window == 0 || bound > window) {
        throw Error(ErrorCode::InvalidConstraint, "satisfies requires 0 <= a <= K and K >= 1");
    }
    if (seq.size() < window) {
        throw Error(ErrorCode::SequenceTooShort,
                    "sequence of length " + std::to_string(seq.size()) +
                        " is shorter than window " + std::to_string(window));
    }
    const auto out = seq.outcomes();
    const std::size_t windows = out.size() - window + 1;

    if (kind == ConstraintKind::AnyHits || kind == ConstraintKind::AnyMisses) {
        // Sliding hit count.
        std::size_t hits = static_cast<std::size_t>(
            std::count(out.begin(), out.begin() + window, Outcome::Hit));
        for (std::size_t start = 0;; ++start) {
            const bool ok = kind == ConstraintKind::AnyHits ? hits >= bound
                                                            : window - hits <= bound;
            if (!ok) return false;
            if (start + 1 == windows) break;
            hits -= out[start] == Outcome::Hit;
            hits += out[start + window] == Outcome::Hit;
        }
        return true;
    }

    const Outcome target = kind == ConstraintKind::RowHits ? Outcome::Hit : Outcome::Miss;
    for (std::size_t start = 0; start < windows; ++start) {
        std::uint32_t run = 0;
        std::uint32_t longest = 0;
        for (std::size_t j = start; j < start + window; ++j) {
            run = out[j] == target ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        const bool ok = kind == ConstraintKind::RowHits ? longest >= bound : longest <= bound;
        if (!ok) return false;
    }
    return true;
}

DeadlineSequence critical_sequence(const MKTransform& t) {
    std::vector<Outcome> out(t.h, Outcome::Hit);
    out.insert(out.end(), t.w, Outcome::Miss);
    return DeadlineSequence(std::move(out));
}

std::string CostRatio::decimal() const { return format_significant(harder, original, 4); }

// The two binary trees of depth K enumerate exactly the 2^K outcome strings,
// so a flat loop over K-bit integers visits the same branches.
CostRatio transformation_cost(const WeaklyHardConstraint& c) {
    check_window(c, kMaxCountWindow);
    const auto wh = derive_wh(c);
    const std::uint32_t k = c.window();
    const std::uint32_t required_hits = k - c.misses();

    CostRatio r{0, 0};
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t s = 0; s < total; ++s) {
        const auto bits = static_cast<std::uint32_t>(s);
        if (static_cast<std::uint32_t>(std::popcount(bits)) >= required_hits) ++r.original;
        if (misses_within(bits, k, wh.w, wh.window())) ++r.harder;
    }
    return r;
}

bool hardness_bruteforce(const WeaklyHardConstraint& c) {
    check_window(c, kMaxBruteForceWindow);
    const auto wh = derive_wh(c);
    const std::uint32_t k = c.window();
    const std::uint32_t required_hits = k - c.misses();
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t s = 0; s < total; ++s) {
        const auto bits = static_cast<std::uint32_t>(s);
        if (misses_within(bits, k, wh.w, wh.window()) &&
            static_cast<std::uint32_t>(std::popcount(bits)) < required_hits) {
            return false;
        }
    }
    return true;
}

std::string format_significant(std::uint64_t num, std::uint64_t den, int digits) {
    if (num == 0 || den == 0 || digits < 1) {
        throw Error(ErrorCode::InvalidSpec, "format_significant requires num, den, digits > 0");
    }
    const u128 lo = pow10(digits - 1);
    const u128 hi = pow10(digits);

    // value = num/den; find scale e so that lo <= num * 10^e / den < hi.
    int e = 0;
    auto scaled_num = [&](int ex) { return ex >= 0 ? u128{num} * pow10(ex) : u128{num}; };
    auto scaled_den = [&](int ex) { return ex >= 0 ? u128{den} : u128{den} * pow10(-ex); };
    while (scaled_num(e) / scaled_den(e) < lo) ++e;
    while (scaled_num(e) / scaled_den(e) >= hi) --e;

    const u128 n = scaled_num(e);
    const u128 d = scaled_den(e);
    u128 q = n / d;
    const u128 rem = n % d;
    if (2 * rem > d || (2 * rem == d && (q & 1) != 0)) ++q;
    if (q == hi) {
        q = lo;
        --e;
    }

    if (e <= 0) return to_decimal_digits(q * pow10(-e));
    std::string frac = to_decimal_digits(q % pow10(e));
    frac.insert(0, static_cast<std::size_t>(e) - frac.size(), '0');
    return to_decimal_digits(q / pow10(e)) + "." + frac;
}

}  // namespace whrt
