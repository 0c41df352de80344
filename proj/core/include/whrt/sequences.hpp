#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whrt/model.hpp"

namespace whrt {

enum class Outcome : std::uint8_t { Miss = 0, Hit = 1 };

// Ordered deadline outcomes of consecutive jobs, 1 = hit, 0 = miss.
class DeadlineSequence {
public:
    DeadlineSequence() = default;
    explicit DeadlineSequence(std::vector<Outcome> outcomes) : outcomes_(std::move(outcomes)) {}

    // Parses a string of '0'/'1' characters; throws ParseError on anything else.
    static DeadlineSequence parse(std::string_view bits);

    std::size_t size() const noexcept { return outcomes_.size(); }
    bool empty() const noexcept { return outcomes_.empty(); }
    Outcome operator[](std::size_t i) const { return outcomes_[i]; }
    std::span<const Outcome> outcomes() const noexcept { return outcomes_; }

    void push_back(Outcome o) { outcomes_.push_back(o); }
    void reserve(std::size_t n) { outcomes_.reserve(n); }

    std::size_t misses() const noexcept;
    std::string to_string() const;

    friend bool operator==(const DeadlineSequence&, const DeadlineSequence&) = default;

private:
    std::vector<Outcome> outcomes_;
};

// The four weakly-hard notations: any-order hits (m K), any-order misses
// overline(m K), consecutive hits <m K>, consecutive misses overline<m K>.
enum class ConstraintKind { AnyHits, AnyMisses, RowHits, RowMisses };

// True iff every window of exactly `window` consecutive outcomes meets the
// predicate with bound `bound`. Throws SequenceTooShort if seq is shorter than
// the window and InvalidConstraint if bound > window or window == 0.
bool satisfies(const DeadlineSequence& seq, ConstraintKind kind, std::uint32_t bound,
               std::uint32_t window);

// h hits followed by w misses.
DeadlineSequence critical_sequence(const MKTransform& t);

// Ratio of length-K sequences accepted by the transformed constraint
// overline(w, w+h) to those accepted by overline(m, K).
struct CostRatio {
    std::uint64_t harder;
    std::uint64_t original;

    double value() const noexcept {
        return static_cast<double>(harder) / static_cast<double>(original);
    }
    // Four significant digits, ties to even, e.g. "0.5625" or "0.01040".
    std::string decimal() const;
};

inline constexpr std::uint32_t kMaxCountWindow = 24;
inline constexpr std::uint32_t kMaxBruteForceWindow = 20;

// Enumerates all 2^K outcome strings. Throws WindowTooLarge for K > 24 and
// HardTaskHasNoTransform for m = 0.
CostRatio transformation_cost(const WeaklyHardConstraint& c);

// True iff no length-K sequence satisfies overline(w, w+h) while violating
// overline(m, K). Throws WindowTooLarge for K > 20.
bool hardness_bruteforce(const WeaklyHardConstraint& c);

// Exact decimal rendering of num/den to `digits` significant digits with
// round-half-to-even. Requires num > 0, den > 0.
std::string format_significant(std::uint64_t num, std::uint64_t den, int digits);

}  // namespace whrt
