#include "schubert/charts.hpp"

#include <algorithm>

namespace schubert {

std::string InsertionWalk::steps() const {
    std::string out;
    int row = 0;
    for (int pos : identity_rows) {
        out.append(pos - 1 - row, 'D');
        out += 'R';
        row = pos;
    }
    out.append(box.ambient() - row, 'D');
    return out;
}

InsertionWalk insertion_walk(const Partition& lambda) {
    InsertionWalk walk{lambda.box(), {}};
    for (int i = 1; i <= lambda.rows(); ++i) {
        walk.identity_rows.push_back(lambda.box().c - lambda.part(i) + i);
    }
    return walk;
}

void ZeroPattern::insert(int row, int col) {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) {
        throw InvalidArgument("pattern position (" + std::to_string(row) + "," +
                              std::to_string(col) + ") outside " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
    }
    entries_.emplace(row, col);
}

ZeroPattern ZeroPattern::united(const ZeroPattern& other) const {
    if (other.rows_ != rows_ || other.cols_ != cols_) throw InvalidArgument("pattern shape mismatch");
    ZeroPattern out = *this;
    out.entries_.insert(other.entries_.begin(), other.entries_.end());
    return out;
}

ZeroPattern ZeroPattern::intersected(const ZeroPattern& other) const {
    if (other.rows_ != rows_ || other.cols_ != cols_) throw InvalidArgument("pattern shape mismatch");
    ZeroPattern out(rows_, cols_);
    std::set_intersection(entries_.begin(), entries_.end(), other.entries_.begin(),
                          other.entries_.end(), std::inserter(out.entries_, out.entries_.end()));
    return out;
}

std::string ZeroPattern::to_grid() const {
    std::string out;
    for (int r = 1; r <= rows_; ++r) {
        for (int c = 1; c <= cols_; ++c) out += contains(r, c) ? '0' : '.';
        out += '\n';
    }
    return out;
}

ZeroPattern ZeroPattern::parse_grid(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    const int cols = lines.empty() ? 0 : static_cast<int>(lines.front().size());
    ZeroPattern out(static_cast<int>(lines.size()), cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (static_cast<int>(lines[r].size()) != cols) throw InvalidArgument("ragged pattern grid");
        for (int c = 0; c < cols; ++c) {
            const char ch = lines[r][c];
            if (ch == '0') {
                out.insert(static_cast<int>(r) + 1, c + 1);
            } else if (ch != '.') {
                throw InvalidArgument(std::string("unexpected character '") + ch + "' in pattern");
            }
        }
    }
    return out;
}

ZeroPattern zero_pattern(const Partition& lambda) {
    const Box box = lambda.box();
    ZeroPattern out(box.c, box.d);
    for (int j = 1; j <= box.d; ++j)
        for (int r = box.c - lambda.part(j) + 1; r <= box.c; ++r) out.insert(r, j);
    return out;
}

ZeroPattern condition_block(const Partition& lambda, int i) {
    const Box box = lambda.box();
    if (i < 1 || i > box.d) throw InvalidArgument("condition index out of range");
    ZeroPattern out(box.c, box.d);
    for (int j = 1; j <= i; ++j)
        for (int r = box.c - lambda.part(i) + 1; r <= box.c; ++r) out.insert(r, j);
    return out;
}

bool vanishes_on(const FpMatrix& a, const ZeroPattern& pattern) {
    if (a.rows() != static_cast<std::size_t>(pattern.rows()) ||
        a.cols() != static_cast<std::size_t>(pattern.cols())) {
        throw InvalidArgument("matrix and pattern shapes differ");
    }
    return std::all_of(pattern.entries().begin(), pattern.entries().end(),
                       [&](const auto& rc) { return a(rc.first - 1, rc.second - 1) == 0; });
}

Subspace chart_point(const FpMatrix& a, const Partition& lambda, const FlagSpec& basis) {
    if (basis.ambient() != static_cast<std::size_t>(lambda.box().ambient())) {
        throw InvalidArgument("basis spans dimension " + std::to_string(basis.ambient()) +
                              ", chart needs " + std::to_string(lambda.box().ambient()));
    }
    const FpMatrix ma = build_MA(a, lambda);
    // Column j of M_A holds coordinates in v_1..v_m; as a row vector that is
    // (M_A^T * basis)_j.
    return Subspace::span(basis.field(), multiply(basis.field(), ma.transposed(), basis.basis()));
}

std::vector<std::vector<std::string>> symbolic_MA(const Partition& lambda) {
    const Box box = lambda.box();
    const auto walk = insertion_walk(lambda);
    std::vector<std::vector<std::string>> out;
    int next_a = 1;
    std::size_t next_id = 0;
    for (int row = 1; row <= box.ambient(); ++row) {
        std::vector<std::string> line;
        if (next_id < walk.identity_rows.size() && row == walk.identity_rows[next_id]) {
            for (int col = 0; col < box.d; ++col)
                line.push_back(col == static_cast<int>(next_id) ? "1" : "0");
            ++next_id;
        } else {
            for (int col = 1; col <= box.d; ++col)
                line.push_back("a" + std::to_string(next_a) + std::to_string(col));
            ++next_a;
        }
        out.push_back(std::move(line));
    }
    return out;
}

FpMatrix chart_matrix_at(const PrimeField& f, std::size_t rows, std::size_t cols,
                         std::uint64_t index) {
    FpMatrix a(rows, cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            a(r, c) = static_cast<std::uint8_t>(index % f.order());
            index /= f.order();
        }
    return a;
}

}  // namespace schubert
