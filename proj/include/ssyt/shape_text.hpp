#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ssyt/errors.hpp"
#include "ssyt/plane_partition.hpp"
#include "ssyt/shape_family.hpp"

namespace ssyt {

/// Result of parsing shape text: a concrete shape when every entry is an
/// integer, a family when the parameter token `n` appears.
using ShapeOrFamily = std::variant<PlanePartition, ShapeFamily>;

namespace detail {

class ShapeTextParser {
public:
    explicit ShapeTextParser(std::string_view text) : text_(text) {}

    std::vector<std::vector<ShapeFamily::Entry>> parse() {
        skip_ws();
        expect('[');
        std::vector<std::vector<ShapeFamily::Entry>> rows;
        skip_ws();
        if (peek() != ']') {
            rows.push_back(parse_row());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                skip_ws();
                rows.push_back(parse_row());
                skip_ws();
            }
        }
        expect(']');
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters after shape");
        return rows;
    }

private:
    std::vector<ShapeFamily::Entry> parse_row() {
        expect('[');
        std::vector<ShapeFamily::Entry> row;
        skip_ws();
        if (peek() == ']') throw ParseError(pos_, "empty row");
        row.push_back(parse_entry());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            skip_ws();
            row.push_back(parse_entry());
            skip_ws();
        }
        expect(']');
        return row;
    }

    ShapeFamily::Entry parse_entry() {
        if (peek() == 'n') {
            ++pos_;
            return {true, 0};
        }
        std::size_t start = pos_;
        if (peek() == '-') ++pos_; // let validation report non-positive entries
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) {
            throw ParseError(pos_, "expected an integer or 'n'");
        }
        long v = std::stol(std::string(text_.substr(start, pos_ - start)));
        return {false, static_cast<int>(v)};
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) {
            throw ParseError(pos_, std::string("expected '") + c + "' at position " +
                                       std::to_string(pos_));
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the nested-bracket shape syntax, e.g. "[[3,3,3],[3,3,3],[3,3,3]]"
/// or "[[n,n],[n,1]]". Whitespace is insignificant. Only plain integers and
/// the literal token `n` are accepted; affine entries are syntax errors.
inline ShapeOrFamily parse_shape_text(std::string_view text) {
    auto entries = detail::ShapeTextParser(text).parse();
    bool has_param = false;
    for (const auto& row : entries)
        for (const auto& e : row) has_param |= e.is_param;
    if (has_param) return ShapeFamily::create(std::move(entries));
    std::vector<std::vector<int>> rows;
    rows.reserve(entries.size());
    for (const auto& frow : entries) {
        std::vector<int> row;
        row.reserve(frow.size());
        for (const auto& e : frow) row.push_back(e.value);
        rows.push_back(std::move(row));
    }
    return PlanePartition::validate(rows);
}

/// Parses text that must denote a concrete shape.
inline PlanePartition parse_shape(std::string_view text) {
    auto v = parse_shape_text(text);
    if (std::holds_alternative<ShapeFamily>(v)) {
        throw ParseError(0, "expected a concrete shape, got a family with parameter n");
    }
    return std::get<PlanePartition>(std::move(v));
}

/// Parses text that must denote a family.
inline ShapeFamily parse_family(std::string_view text) {
    auto v = parse_shape_text(text);
    if (std::holds_alternative<PlanePartition>(v)) {
        throw ParseError(0, "expected a family containing the parameter n");
    }
    return std::get<ShapeFamily>(std::move(v));
}

} // namespace ssyt
