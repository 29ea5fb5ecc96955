#include "schubert/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace schubert {

namespace {

int parse_int(std::string_view text, std::string_view what) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidArgument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Box::Box(int rows, int cols) : d(rows), c(cols) {
    if (d < 1) throw InvalidArgument("box needs d >= 1, got d=" + std::to_string(d));
    if (c < 0) throw InvalidArgument("box needs c >= 0, got c=" + std::to_string(c));
}

Box Box::parse(std::string_view text) {
    auto x = text.find('x');
    if (x == std::string_view::npos) {
        throw InvalidArgument("box must look like 'dxc', got '" + std::string(text) + "'");
    }
    return Box(parse_int(text.substr(0, x), "box"), parse_int(text.substr(x + 1), "box"));
}

std::string Box::to_string() const { return std::to_string(d) + "x" + std::to_string(c); }

Partition::Partition(Box box, std::vector<int> parts) : box_(box), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) > box_.d) {
        throw InvalidArgument("partition has " + std::to_string(parts_.size()) +
                              " parts but box " + box_.to_string() + " allows d=" +
                              std::to_string(box_.d));
    }
    parts_.resize(box_.d, 0);
    for (int i = 0; i < box_.d; ++i) {
        const int p = parts_[i];
        const std::string idx = std::to_string(i + 1);
        if (p < 0) throw InvalidArgument("part " + idx + " is negative");
        if (p > box_.c) {
            throw InvalidArgument("part " + idx + " exceeds c=" + std::to_string(box_.c));
        }
        if (i > 0 && p > parts_[i - 1]) {
            throw InvalidArgument("part " + idx + " exceeds part " + std::to_string(i));
        }
    }
}

Partition Partition::empty(Box box) { return Partition(box, {}); }

Partition Partition::full(Box box) { return Partition(box, std::vector<int>(box.d, box.c)); }

Partition Partition::parse(Box box, std::string_view text) {
    std::vector<int> parts;
    bool blank = std::all_of(text.begin(), text.end(), [](char ch) { return ch == ' '; });
    if (!blank) {
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            parts.push_back(parse_int(text.substr(start, comma - start), "partition"));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    // Zeros past the d-th part are harmless and common in hand-written input.
    while (static_cast<int>(parts.size()) > box.d && parts.back() == 0) parts.pop_back();
    return Partition(box, std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1 || i > box_.d) return 0;
    return parts_[i - 1];
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int weight(const Partition& p) {
    return std::accumulate(p.parts().begin(), p.parts().end(), 0);
}

int empty_squares(const Partition& p) { return p.box().area() - weight(p); }

bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.box() != lambda.box()) {
        throw InvalidArgument("box mismatch: " + mu.box().to_string() + " vs " +
                              lambda.box().to_string());
    }
    for (int i = 1; i <= mu.rows(); ++i) {
        if (mu.part(i) < lambda.part(i)) return false;
    }
    return true;
}

bool GradedOrder::operator()(const Partition& a, const Partition& b) const {
    const int wa = weight(a);
    const int wb = weight(b);
    if (wa != wb) return wa < wb;
    if (a.box() != b.box()) {
        return std::pair(a.box().d, a.box().c) < std::pair(b.box().d, b.box().c);
    }
    return a.parts() > b.parts();
}

std::vector<Partition> enumerate_partitions(Box box, std::optional<int> weight_filter) {
    std::vector<Partition> out;
    std::vector<int> parts(box.d, 0);
    // Depth-first over rows, each row bounded by the previous one.
    auto recurse = [&](auto&& self, int row, int bound, int remaining) -> void {
        if (row == box.d) {
            if (!weight_filter || remaining == 0) out.emplace_back(box, parts);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            if (weight_filter && v > remaining) continue;
            parts[row] = v;
            self(self, row + 1, v, weight_filter ? remaining - v : 0);
        }
        parts[row] = 0;
    };
    recurse(recurse, 0, box.c, weight_filter.value_or(0));
    std::stable_sort(out.begin(), out.end(), GradedOrder{});
    return out;
}

std::uint64_t count_partitions(Box box) {
    // binomial(d + c, d) by the multiplicative formula; exact at each step.
    std::uint64_t result = 1;
    const int n = box.ambient();
    const int k = std::min(box.d, box.c);
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
    return result;
}

std::string render(const Partition& p) {
    std::string out;
    for (int i = 1; i <= p.rows(); ++i) {
        out.append(p.part(i), kFullSquare);
        out.append(p.box().c - p.part(i), kEmptySquare);
        out += '\n';
    }
    return out;
}

Partition parse_diagram(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) throw InvalidArgument("empty diagram");
    const int width = static_cast<int>(lines.front().size());
    std::vector<int> parts;
    for (std::size_t r = 0; r < lines.size(); ++r) {
        const auto line = lines[r];
        if (static_cast<int>(line.size()) != width) {
            throw InvalidArgument("diagram row " + std::to_string(r + 1) + " has length " +
                                  std::to_string(line.size()) + ", expected " +
                                  std::to_string(width));
        }
        int filled = 0;
        bool seen_empty = false;
        for (char ch : line) {
            if (ch == kFullSquare) {
                if (seen_empty) {
                    throw InvalidArgument("diagram row " + std::to_string(r + 1) +
                                          " is not left-justified");
                }
                ++filled;
            } else if (ch == kEmptySquare) {
                seen_empty = true;
            } else {
                throw InvalidArgument(std::string("unexpected character '") + ch + "' in diagram");
            }
        }
        parts.push_back(filled);
    }
    return Partition(Box(static_cast<int>(lines.size()), width), std::move(parts));
}

std::string render_rotated(const Partition& p) {
    std::string out;
    const int c = p.box().c;
    for (int r = 1; r <= c; ++r) {
        for (int j = 1; j <= p.rows(); ++j) out += r > c - p.part(j) ? kFullSquare : kEmptySquare;
        out += '\n';
    }
    return out;
}

}  // namespace schubert
