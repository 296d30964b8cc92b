#pragma once

#include <compare>
#include <numeric>

#include "word.hpp"

namespace betahole {

/// Periodic binary sequence w^inf, stored by its primitive period. Two
/// sequences are equal iff their canonical periods are equal, so the period
/// is normalized on construction.
class PeriodicSequence {
public:
    // primitive_root rejects the empty word, so the period is always valid here
    explicit PeriodicSequence(const Word& period) : period_(primitive_root(period)) {}

    static PeriodicSequence parse(std::string_view bits) {
        return PeriodicSequence(Word::parse(bits));
    }

    const Word& period() const { return period_; }
    std::size_t period_length() const { return period_.size(); }
    int digit(std::size_t i) const { return period_[i % period_.size()]; }
    bool is_zero() const { return period_.size() == 1 && period_[0] == 0; }

    /// sigma^k of the sequence, again periodic.
    PeriodicSequence shifted(std::size_t k) const {
        return PeriodicSequence(rotation(period_, k % period_.size()));
    }

    Word prefix(std::size_t n) const {
        std::vector<std::uint8_t> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint8_t>(digit(i));
        return Word(std::move(d));
    }

    std::string to_string() const { return "(" + period_.to_string() + ")^inf"; }

    bool operator==(const PeriodicSequence& o) const { return period_ == o.period_; }

    // Lexicographic order on the infinite sequences; decided within
    // lcm(|a|,|b|) digits.
    std::strong_ordering operator<=>(const PeriodicSequence& o) const {
        const std::size_t n = std::lcm(period_.size(), o.period_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const int a = digit(i), b = o.digit(i);
            if (a != b) return a <=> b;
        }
        return std::strong_ordering::equal;
    }

private:
    Word period_;
};

inline PeriodicSequence conjugate(const PeriodicSequence& s) {
    return PeriodicSequence(conjugate(s.period()));
}

/// Eventually periodic sequence: a finite preperiod followed by a periodic
/// tail. Canonical form has the shortest possible preperiod (digits shared
/// with the rotated tail are absorbed) and a primitive tail period.
class EventuallyPeriodicSequence {
public:
    EventuallyPeriodicSequence(Word preperiod, PeriodicSequence tail)
        : pre_(std::move(preperiod)), tail_(std::move(tail)) {
        canonicalize();
    }

    explicit EventuallyPeriodicSequence(PeriodicSequence tail) : pre_(), tail_(std::move(tail)) {}

    /// Parse "pre:period", e.g. ":1" for (1)^inf or "01:10" for 01(10)^inf.
    static EventuallyPeriodicSequence parse(std::string_view text) {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("expected 'preperiod:period'");
        return EventuallyPeriodicSequence(Word::parse(text.substr(0, colon)),
                                          PeriodicSequence::parse(text.substr(colon + 1)));
    }

    const Word& preperiod() const { return pre_; }
    const PeriodicSequence& tail() const { return tail_; }

    int digit(std::size_t i) const {
        return i < pre_.size() ? pre_[i] : tail_.digit(i - pre_.size());
    }

    std::string to_string() const { return pre_.to_string() + tail_.to_string(); }

    bool operator==(const EventuallyPeriodicSequence& o) const {
        return pre_ == o.pre_ && tail_ == o.tail_;
    }

    // Decided within max(|pre_x|,|pre_y|) + lcm(tail periods) digits: past
    // that point both sequences share a common period, so agreement there
    // means agreement everywhere.
    std::strong_ordering operator<=>(const EventuallyPeriodicSequence& o) const {
        const std::size_t bound = std::max(pre_.size(), o.pre_.size()) +
                                  std::lcm(tail_.period_length(), o.tail_.period_length());
        for (std::size_t i = 0; i < bound; ++i) {
            const int a = digit(i), b = o.digit(i);
            if (a != b) return a <=> b;
        }
        return std::strong_ordering::equal;
    }

private:
    void canonicalize() {
        auto pre = pre_.digits();
        Word period = tail_.period();
        while (!pre.empty() && pre.back() == period[period.size() - 1]) {
            // absorb: x p^inf == x' (rot p)^inf when x ends with p's last digit
            period = rotation(period, period.size() - 1);
            pre.pop_back();
        }
        pre_ = Word(std::move(pre));
        tail_ = PeriodicSequence(period);
    }

    Word pre_;
    PeriodicSequence tail_;
};

inline EventuallyPeriodicSequence conjugate(const EventuallyPeriodicSequence& s) {
    return EventuallyPeriodicSequence(conjugate(s.preperiod()), conjugate(s.tail()));
}

} // namespace betahole
