#pragma once

#include "ramsey/seqsets.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// Subset of [1..n] with dense membership storage.
class WindowSet {
public:
    WindowSet() = default;
    explicit WindowSet(int n) : n_(n), member_(std::size_t(n) + 1, false) {
        if (n < 0) throw std::invalid_argument("WindowSet: negative window");
    }
    static WindowSet full(int n);

    int window_end() const { return n_; }
    bool contains(int i) const { return i >= 1 && i <= n_ && member_[std::size_t(i)]; }
    void insert(int i);
    std::vector<int> elements() const;
    std::size_t count() const;

    bool operator==(const WindowSet&) const = default;

private:
    int n_ = 0;
    std::vector<bool> member_;
};

// Text format: first line `n`, second line `list: a b c ...` or
// `rule: <rule-expr>` (members are the points the rule colors nonzero).
WindowSet parse_window_set(std::istream& in);
WindowSet parse_window_set_text(const std::string& text);
std::string print_window_set(const WindowSet& A);

// Finite-window largeness parameters: syndeticity gap g and interval
// length L; g <= L whenever both are used together.
struct LargenessParams {
    int g = 1;
    int L = 1;
};

// A contains L consecutive integers.
bool is_thick(const WindowSet& A, int L);

// Every length-g subinterval of [1..n] meets A.
bool is_syndetic(const WindowSet& A, int g);

struct Interval {
    int lo = 0, hi = 0;  // inclusive
    bool operator==(const Interval&) const = default;
};

// Leftmost interval I with |I| >= L such that every length-g subinterval of
// I meets A; ties at the same start resolved toward the longest I.
std::optional<Interval> find_pws_interval(const WindowSet& A, const LargenessParams& params);

struct IprStarResult {
    enum class Status { holds, counterexample, vacuous };
    Status status = Status::vacuous;
    std::vector<std::int64_t> counterexample;  // lexicographically least, when present
};

// Does A meet every IP_r set inside the window? A length-r generator
// sequence is admissible when its full FS lies in [1..n]; `distinct`
// restricts enumeration to injective sequences. The counterexample, when
// one exists, is canonical (lexicographically least) regardless of the
// worker count.
IprStarResult check_ip_r_star(const WindowSet& A, int r, bool distinct = true, int workers = 0);

}  // namespace ramsey
