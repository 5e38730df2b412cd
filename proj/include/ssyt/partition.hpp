#pragma once

#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ssyt/errors.hpp"

namespace ssyt {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is allowed and represents the empty 2D shape.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw ValidationError(ValidationError::Kind::NonPositiveEntry,
                                      static_cast<int>(i + 1), 1,
                                      "partition part " + std::to_string(i + 1) +
                                          " is not positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw ValidationError(ValidationError::Kind::RowNotDecreasing,
                                      static_cast<int>(i + 1), 1,
                                      "partition parts increase at position " +
                                          std::to_string(i + 1));
            }
        }
    }

    /// Parses comma-separated parts, e.g. "3,2,2,1".
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != ',') ++pos;
            std::string tok(text.substr(start, pos - start));
            // trim trailing spaces
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            if (tok.empty()) throw ParseError(start, "empty partition part");
            char* end = nullptr;
            long v = std::strtol(tok.c_str(), &end, 10);
            if (end == nullptr || *end != '\0') {
                throw ParseError(start, "bad partition part '" + tok + "'");
            }
            parts.push_back(static_cast<int>(v));
            if (pos < text.size()) ++pos; // skip comma
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0L);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

} // namespace ssyt
