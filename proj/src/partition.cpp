#include "gammaflow/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gammaflow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition part must be >= 1");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::singleton(int part) {
    return Partition(std::vector<int>{part});
}

Partition Partition::with_part(int part) const {
    if (part < 1) throw std::invalid_argument("partition part must be >= 1");
    Partition out;
    out.parts_.reserve(parts_.size() + 1);
    auto pos = std::lower_bound(parts_.begin(), parts_.end(), part, std::greater<int>());
    out.parts_.insert(out.parts_.end(), parts_.begin(), pos);
    out.parts_.push_back(part);
    out.parts_.insert(out.parts_.end(), pos, parts_.end());
    out.weight_ = weight_ + part;
    return out;
}

Partition Partition::without_part(int part) const {
    auto pos = std::find(parts_.begin(), parts_.end(), part);
    if (pos == parts_.end()) throw std::invalid_argument("part not present in partition");
    Partition out;
    out.parts_.reserve(parts_.size() - 1);
    out.parts_.insert(out.parts_.end(), parts_.begin(), pos);
    out.parts_.insert(out.parts_.end(), std::next(pos), parts_.end());
    out.weight_ = weight_ - part;
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

bool Partition::canonical_precedes(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ > b.weight_;
    return a.parts_ > b.parts_;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t i = 0;
    const auto fail = [&]() -> void {
        throw std::invalid_argument("bad partition literal: \"" + text + "\"");
    };
    if (text.empty()) fail();
    while (i < text.size()) {
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i || j - i > 9) fail();
        int value = std::stoi(text.substr(i, j - i));
        if (value < 1) fail();
        parts.push_back(value);
        if (j == text.size()) break;
        if (text[j] != ',') fail();
        i = j + 1;
        if (i == text.size()) fail();
    }
    return Partition(std::move(parts));
}

}
