#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace pancake {

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 64;

/// Permutation of {1..n} in one-line notation, the vertex type of a pancake
/// graph. Fixed-capacity value type: copies are trivial and the byte image is
/// directly hashable. The unused tail is kept zeroed so equality and hashing
/// never need the degree.
class Perm {
public:
    static Perm identity(int n);

    /// Builds from one-line notation; rejects anything that is not a
    /// bijection of {1..n} with n in [2, 64].
    static Perm from_entries(std::span<const int> entries);

    /// Parses "4 3 2 1 5" (brackets and commas tolerated).
    static Perm parse(std::string_view text);

    int degree() const { return n_; }

    /// Value at 1-based position pos.
    int at(int pos) const { return entries_[pos - 1]; }

    /// Right action of the prefix-reversal r_i: reverses positions 1..i.
    void reverse_prefix(int i);

    Perm after_reversal(int i) const {
        Perm q = *this;
        q.reverse_prefix(i);
        return q;
    }

    bool is_identity() const;

    /// "1 2 3 4"
    std::string str() const;

    std::span<const std::uint8_t> bytes() const {
        return {entries_.data(), static_cast<std::size_t>(n_)};
    }

    friend bool operator==(const Perm&, const Perm&) = default;

    /// Byte-wise comparison; with the degree fixed this is lexicographic
    /// order on one-line notation.
    friend auto operator<=>(const Perm&, const Perm&) = default;

    struct Hash {
        std::size_t operator()(const Perm& p) const noexcept;
    };

private:
    Perm() = default;

    std::array<std::uint8_t, kMaxDegree> entries_{};
    std::uint8_t n_ = 0;
};

enum class Parity { Even, Odd };

/// Parity of r_i as a group element: r_i is a product of floor(i/2) disjoint
/// transpositions.
Parity reversal_parity(int i);

/// Applies a sequence of reversal indices left to right (right action chain).
Perm apply_indices(Perm p, std::span<const int> indices);

}  // namespace pancake
