// Partitions and Ferrers diagrams (right-aligned dot convention), conjugation,
// boxed enumeration, and the surviving-dot counts behind the Ferrers bound.

#ifndef FERROCODE_FERRERS_HPP
#define FERROCODE_FERRERS_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ferrocode {

class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0) throw error(errc::bad_params, "partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw error(errc::bad_params, "partition parts must be weakly decreasing");
        }
    }

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  private:
    std::vector<unsigned> parts_;
};

// Dots of row r sit in the last row_length(r) columns of the a x b bounding
// box (right-aligned); rows are weakly decreasing top to bottom.
class FerrersDiagram {
  public:
    FerrersDiagram() = default;

    explicit FerrersDiagram(Partition rows) : rows_(std::move(rows)) {}

    explicit FerrersDiagram(std::vector<unsigned> row_lengths)
        : rows_(Partition(std::move(row_lengths))) {}

    static FerrersDiagram rectangle(unsigned a, unsigned b) {
        if (a == 0 || b == 0) return FerrersDiagram{};
        return FerrersDiagram(std::vector<unsigned>(a, b));
    }

    // "4,4,2"
    static FerrersDiagram parse(const std::string& text) {
        std::vector<unsigned> rows;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t pos = 0;
                unsigned long v = std::stoul(item, &pos);
                while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
                if (pos != item.size() || v == 0) throw std::invalid_argument(item);
                rows.push_back(static_cast<unsigned>(v));
            } catch (const std::exception&) {
                throw error(errc::parse_error, "bad diagram row length '" + item + "'");
            }
        }
        if (rows.empty()) throw error(errc::parse_error, "empty diagram string");
        try {
            return FerrersDiagram(std::move(rows));
        } catch (const error&) {
            throw error(errc::parse_error, "row lengths must be weakly decreasing");
        }
    }

    const Partition& partition() const noexcept { return rows_; }
    const std::vector<unsigned>& row_lengths() const noexcept { return rows_.parts(); }
    unsigned rows() const noexcept { return static_cast<unsigned>(rows_.parts().size()); }
    unsigned cols() const noexcept { return rows_.empty() ? 0 : rows_.parts()[0]; }
    unsigned dots() const noexcept { return rows_.total(); }

    bool has_dot(unsigned r, unsigned c) const noexcept {
        if (r >= rows() || c >= cols()) return false;
        return c >= cols() - rows_.parts()[r];
    }

    std::vector<std::pair<unsigned, unsigned>> dot_cells() const {
        std::vector<std::pair<unsigned, unsigned>> cells;
        cells.reserve(dots());
        for (unsigned r = 0; r < rows(); ++r)
            for (unsigned c = cols() - rows_.parts()[r]; c < cols(); ++c) cells.emplace_back(r, c);
        return cells;
    }

    // Transpose across the secondary diagonal; an a x b diagram becomes b x a.
    FerrersDiagram conjugate() const {
        if (rows_.empty()) return {};
        unsigned b = cols();
        std::vector<unsigned> conj(b, 0);
        for (auto len : rows_.parts())
            for (unsigned j = 0; j < len; ++j) ++conj[j];
        return FerrersDiagram(std::move(conj));
    }

    // Diagram left after deleting the first i rows and the rightmost j
    // columns of the bounding box.
    FerrersDiagram punctured(unsigned drop_first_rows, unsigned drop_last_cols) const {
        std::vector<unsigned> out;
        const auto& p = rows_.parts();
        for (std::size_t r = drop_first_rows; r < p.size(); ++r)
            if (p[r] > drop_last_cols) out.push_back(p[r] - drop_last_cols);
        if (out.empty()) return {};
        return FerrersDiagram(std::move(out));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.parts().size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows_.parts()[i]);
        }
        return s;
    }

    friend bool operator==(const FerrersDiagram& a, const FerrersDiagram& b) {
        return a.rows_ == b.rows_;
    }

  private:
    Partition rows_;
};

// Dots neither in the first i rows nor in the rightmost d-1-i columns of the
// bounding box. Closed per-row form; the dot-set scan lives in the tests.
inline unsigned v_count(const FerrersDiagram& f, unsigned d, unsigned i) {
    if (d < 1) throw error(errc::bad_index, "d must be positive");
    if (i > d - 1) throw error(errc::bad_index, "i must lie in [0, d-1]");
    unsigned cols_cut = d - 1 - i;
    unsigned count = 0;
    const auto& rows = f.row_lengths();
    for (std::size_t r = i; r < rows.size(); ++r)
        if (rows[r] > cols_cut) count += rows[r] - cols_cut;
    return count;
}

struct BoundExponent {
    unsigned exponent = 0;             // min_i v_i
    std::vector<unsigned> v;           // v_0 .. v_{d-1}
    std::vector<unsigned> minimizers;  // every i attaining the minimum
};

inline BoundExponent ferrers_bound_exponent(const FerrersDiagram& f, unsigned d) {
    if (d < 1) throw error(errc::bad_index, "d must be positive");
    BoundExponent out;
    out.v.reserve(d);
    for (unsigned i = 0; i < d; ++i) out.v.push_back(v_count(f, d, i));
    out.exponent = *std::min_element(out.v.begin(), out.v.end());
    for (unsigned i = 0; i < d; ++i)
        if (out.v[i] == out.exponent) out.minimizers.push_back(i);
    return out;
}

// All diagrams fitting in an a x b box (exactly `dots` dots when given),
// ordered by total dots, ties by lexicographically larger row sequence first
// (the traditional partition listing).
inline std::vector<FerrersDiagram> enumerate_diagrams(unsigned a, unsigned b,
                                                      std::optional<unsigned> dots = std::nullopt) {
    if (a < 1 || b < 1) throw error(errc::bad_params, "box must be at least 1 x 1");
    std::vector<std::vector<unsigned>> all;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned max_part) -> void {
        if (!cur.empty()) all.push_back(cur);
        if (cur.size() == a) return;
        for (unsigned next = 1; next <= max_part; ++next) {
            cur.push_back(next);
            self(self, next);
            cur.pop_back();
        }
    };
    rec(rec, b);

    if (dots) {
        std::erase_if(all, [&](const std::vector<unsigned>& rows) {
            return std::accumulate(rows.begin(), rows.end(), 0u) != *dots;
        });
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        unsigned sx = std::accumulate(x.begin(), x.end(), 0u);
        unsigned sy = std::accumulate(y.begin(), y.end(), 0u);
        if (sx != sy) return sx < sy;
        return x > y;  // lex-descending within equal dot counts
    });

    std::vector<FerrersDiagram> out;
    out.reserve(all.size());
    for (auto& rows : all) out.emplace_back(std::move(rows));
    if (dots && *dots == 0) out.emplace_back();  // the empty diagram
    return out;
}

}  // namespace ferrocode

#endif
