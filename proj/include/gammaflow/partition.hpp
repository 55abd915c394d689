#pragma once
/* Integer partitions used as monomial keys: weakly decreasing positive parts.
 * The empty partition stands for the constant monomial. */

#include <string>
#include <vector>

namespace gammaflow {

class Partition {
public:
    Partition() = default;

    /* Accepts parts in any order, sorts them decreasingly.
     * Throws std::invalid_argument on a part < 1. */
    explicit Partition(std::vector<int> parts);

    static Partition singleton(int part);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int min_part() const { return parts_.empty() ? 0 : parts_.back(); }

    /* New partition with one extra part merged in. */
    Partition with_part(int part) const;
    /* New partition with one occurrence of `part` removed; throws if absent. */
    Partition without_part(int part) const;

    bool operator==(const Partition&) const = default;

    std::string to_string() const;  /* "(5,4,3)", "()" for the empty partition */

    /* Canonical term order: heavier weight first, ties broken lexicographically
     * with larger parts first. */
    static bool canonical_precedes(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct CanonicalTermOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        return Partition::canonical_precedes(a, b);
    }
};

/* Parses a comma separated list such as "8,8,2"; order does not matter.
 * Throws std::invalid_argument on anything but positive integers. */
Partition parse_partition(const std::string& text);

}
