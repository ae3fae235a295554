#include "tightspan/metric.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tightspan {

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

char point_char(int i) { return i < 9 ? static_cast<char>('1' + i) : static_cast<char>('a' + (i - 9)); }

int point_from_char(char c) {
    if (c >= '1' && c <= '9') return c - '1';
    if (c >= 'a' && c <= 'z') return 9 + (c - 'a');
    return -1;
}

}  // namespace

Pair pair_at(int n, int k) {
    for (int i = 0; i < n - 1; ++i) {
        int row = n - 1 - i;
        if (k < row) return {i, i + 1 + k};
        k -= row;
    }
    throw std::out_of_range("pair index out of range");
}

std::optional<int> points_for_pair_count(std::size_t m) {
    for (int n = 2; pair_count(n) <= static_cast<int>(m); ++n)
        if (static_cast<std::size_t>(pair_count(n)) == m) return n;
    return std::nullopt;
}

std::string pair_label(int n, int k) {
    Pair p = pair_at(n, k);
    return {point_char(p.i), point_char(p.j)};
}

int parse_pair_label(int n, std::string_view label) {
    if (label.size() != 2) throw ParseError("bad pair label '" + std::string(label) + "'", 0);
    int i = point_from_char(label[0]);
    int j = point_from_char(label[1]);
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw ParseError("bad pair label '" + std::string(label) + "'", 0);
    return pair_index(n, i, j);
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[a], img[b]);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> img(image_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[other.image_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(image_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[image_[i]] = static_cast<int>(i);
    return Permutation(std::move(img));
}

std::vector<int> Permutation::pair_action() const {
    int n = size();
    std::vector<int> act(pair_count(n));
    for (int k = 0; k < pair_count(n); ++k) {
        Pair p = pair_at(n, k);
        act[k] = pair_index(n, image_[p.i], image_[p.j]);
    }
    return act;
}

PairSet Permutation::apply(PairSet s) const {
    int n = size();
    PairSet out = 0;
    while (s) {
        int k = std::countr_zero(s);
        s &= s - 1;
        Pair p = pair_at(n, k);
        out |= PairSet{1} << pair_index(n, image_[p.i], image_[p.j]);
    }
    return out;
}

PointSet Permutation::apply_points(PointSet s) const {
    PointSet out = 0;
    for (int i = 0; i < size(); ++i)
        if ((s >> i) & 1u) out |= PointSet{1} << image_[i];
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// ---------------------------------------------------------------------------

Split::Split(int n, PointSet side) : n_(n) {
    if (n < 2 || n > kMaxPoints) throw std::invalid_argument("split: bad point count");
    PointSet all = full();
    side &= all;
    if (side == 0 || side == all) throw std::invalid_argument("split: side must be a nonempty proper subset");
    side_ = (side & 1u) ? side : (all & ~side);
}

int Split::small_size() const {
    int a = std::popcount(side_);
    return std::min(a, n_ - a);
}

std::string Split::to_string() const {
    std::string a, b;
    for (int i = 0; i < n_; ++i) (contains(i) ? a : b) += point_char(i);
    return a + "|" + b;
}

Split Split::permuted(const Permutation& p) const { return Split(n_, p.apply_points(side_)); }

std::vector<Split> Split::all(int n) {
    std::vector<Split> out;
    PointSet full = (PointSet{1} << n) - 1;
    for (PointSet s = 1; s < full; s += 2) out.emplace_back(n, s);
    return out;
}

// ---------------------------------------------------------------------------

Metric::Metric(int n, RationalVector entries) : n_(n), d_(std::move(entries)) {
    if (n < 2) throw std::invalid_argument("metric needs at least two points");
    if (static_cast<int>(d_.size()) != pair_count(n))
        throw std::invalid_argument("metric: expected " + std::to_string(pair_count(n)) + " entries, got " +
                                    std::to_string(d_.size()));
}

Metric Metric::zero(int n) { return Metric(n, RationalVector(pair_count(n), Rational(0))); }

Metric Metric::from_integers(int n, std::span<const long> entries) {
    RationalVector v;
    for (long x : entries) v.emplace_back(x);
    return Metric(n, std::move(v));
}

Rational Metric::operator()(int i, int j) const {
    if (i == j) return 0;
    return d_[pair_index(n_, i, j)];
}

MetricCheck is_metric(const Metric& d) {
    MetricCheck check;
    int n = d.points();
    for (int k = 0; k < pair_count(n); ++k)
        if (sgn(d[k]) < 0) check.negative_pairs.push_back(k);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                if (d(i, j) + d(j, k) < d(i, k)) check.violations.push_back({i, j, k});
            }
    check.ok = check.negative_pairs.empty() && check.violations.empty();
    return check;
}

Metric split_metric(const Split& s) {
    int n = s.points();
    RationalVector v(pair_count(n));
    for (int k = 0; k < pair_count(n); ++k) {
        Pair p = pair_at(n, k);
        v[k] = (s.contains(p.i) != s.contains(p.j)) ? 1 : 0;
    }
    return Metric(n, std::move(v));
}

Metric apply_permutation(const Metric& d, const Permutation& sigma) {
    int n = d.points();
    if (sigma.size() != n) throw std::invalid_argument("permutation size mismatch");
    RationalVector v(pair_count(n));
    for (int k = 0; k < pair_count(n); ++k) {
        Pair p = pair_at(n, k);
        v[pair_index(n, sigma(p.i), sigma(p.j))] = d[k];
    }
    return Metric(n, std::move(v));
}

Metric parse_metric(std::string_view text, int n) {
    auto tokens = tokenize(text);
    if (n < 2) throw ParseError("point count must be at least 2", 0);
    if (static_cast<int>(tokens.size()) != pair_count(n))
        throw ParseError("expected " + std::to_string(pair_count(n)) + " entries for n=" + std::to_string(n) + ", got " +
                             std::to_string(tokens.size()),
                         tokens.size());
    RationalVector v;
    v.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) v.push_back(parse_rational(tokens[i], i));
    return Metric(n, std::move(v));
}

std::string format_metric(const Metric& d) { return to_string(d.entries(), ' '); }

namespace {

std::vector<std::vector<Rational>> parse_rows(const std::vector<std::string>& lines) {
    std::vector<std::vector<Rational>> rows;
    std::size_t pos = 0;
    for (const auto& line : lines) {
        std::vector<Rational> row;
        for (auto tok : tokenize(line)) row.push_back(parse_rational(tok, pos++));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool looks_like_matrix(const std::vector<std::vector<Rational>>& rows) {
    std::size_t k = rows.size();
    if (k < 2) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != k || sgn(rows[i][i]) != 0) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (rows[i][j] != rows[j][i]) return false;
    }
    return true;
}

Metric matrix_to_metric(const std::vector<std::vector<Rational>>& rows) {
    int n = static_cast<int>(rows.size());
    if (n < 2) throw ParseError("matrix needs at least two rows", 0);
    RationalVector v(pair_count(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw ParseError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(n),
                             i);
        if (sgn(rows[i][i]) != 0) throw ParseError("nonzero diagonal entry in row " + std::to_string(i + 1), i);
        for (int j = 0; j < i; ++j) {
            if (rows[i][j] != rows[j][i])
                throw ParseError("matrix not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                 i);
            v[pair_index(n, j, i)] = rows[i][j];
        }
    }
    return Metric(n, std::move(v));
}

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

Metric parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return matrix_to_metric(parse_rows(content_lines(in)));
}

std::vector<Metric> read_metric_file(std::istream& in, MetricFormat format) {
    auto lines = content_lines(in);
    if (format != MetricFormat::Flat) {
        auto rows = parse_rows(lines);
        if (format == MetricFormat::Matrix || looks_like_matrix(rows)) return {matrix_to_metric(rows)};
    }
    std::vector<Metric> out;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto tokens = tokenize(lines[li]);
        auto n = points_for_pair_count(tokens.size());
        if (!n) throw ParseError("line " + std::to_string(li + 1) + ": " + std::to_string(tokens.size()) +
                                     " entries is not n(n-1)/2 for any n",
                                 li);
        try {
            out.push_back(parse_metric(lines[li], *n));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(li + 1) + ": " + e.what(), e.position());
        }
    }
    return out;
}

std::vector<Metric> read_metric_file(const std::string& path, MetricFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_metric_file(in, format);
}

}  // namespace tightspan
