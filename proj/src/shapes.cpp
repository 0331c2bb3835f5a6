#include "nsmac/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nsmac {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("empty composition");
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("negative part in composition");
}

int Composition::sum() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad composition entry: " + item);
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

std::string Composition::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    return out.str();
}

bool reading_less(const Box& a, const Box& b) {
    if (a.row != b.row) return a.row > b.row;
    return a.col > b.col;
}

bool in_column_diagram(const Composition& mu, const Box& u) {
    return u.col >= 1 && u.col <= mu.n() && u.row >= 1 && u.row <= mu[u.col - 1];
}

bool in_augmented_diagram(const Composition& mu, const Box& u) {
    if (u.row == 0) return u.col >= 1 && u.col <= mu.n();
    return in_column_diagram(mu, u);
}

std::vector<Box> column_diagram(const Composition& mu) {
    std::vector<Box> boxes;
    if (mu.parts.empty()) return boxes;
    int top = *std::max_element(mu.parts.begin(), mu.parts.end());
    for (int row = top; row >= 1; --row)
        for (int col = mu.n(); col >= 1; --col)
            if (mu[col - 1] >= row) boxes.push_back(Box{col, row});
    return boxes;
}

std::vector<Box> augmented_diagram(const Composition& mu) {
    std::vector<Box> boxes = column_diagram(mu);
    for (int col = mu.n(); col >= 1; --col) boxes.push_back(Box{col, 0});
    return boxes;
}

static void require_in_diagram(const Composition& mu, const Box& u) {
    if (!in_column_diagram(mu, u))
        throw std::invalid_argument("box (" + std::to_string(u.col) + "," +
                                    std::to_string(u.row) + ") outside diagram of " + mu.str());
}

std::vector<Box> leg_boxes(const Composition& mu, const Box& u) {
    require_in_diagram(mu, u);
    std::vector<Box> r;
    for (int row = u.row + 1; row <= mu[u.col - 1]; ++row) r.push_back(Box{u.col, row});
    return r;
}

std::vector<Box> arm_left_boxes(const Composition& mu, const Box& u) {
    require_in_diagram(mu, u);
    std::vector<Box> r;
    for (int col = 1; col < u.col; ++col)
        if (mu[col - 1] <= mu[u.col - 1] && mu[col - 1] >= u.row) r.push_back(Box{col, u.row});
    return r;
}

std::vector<Box> arm_right_boxes(const Composition& mu, const Box& u) {
    require_in_diagram(mu, u);
    std::vector<Box> r;
    for (int col = u.col + 1; col <= mu.n(); ++col)
        if (mu[col - 1] < mu[u.col - 1] && in_augmented_diagram(mu, Box{col, u.row - 1}))
            r.push_back(Box{col, u.row - 1});
    return r;
}

std::vector<Box> arm_boxes(const Composition& mu, const Box& u) {
    std::vector<Box> r = arm_left_boxes(mu, u);
    std::vector<Box> right = arm_right_boxes(mu, u);
    r.insert(r.end(), right.begin(), right.end());
    return r;
}

int leg_length(const Composition& mu, const Box& u) {
    require_in_diagram(mu, u);
    return mu[u.col - 1] - u.row;
}

int arm_length(const Composition& mu, const Box& u) {
    return static_cast<int>(arm_boxes(mu, u).size());
}

bool attacks(const Box& a, const Box& b) {
    if (a == b) return false;
    if (a.row == b.row) return true;
    if (a.row == b.row + 1) return b.col > a.col;
    if (b.row == a.row + 1) return a.col > b.col;
    return false;
}

std::vector<Triple> enumerate_triples(const Composition& mu) {
    std::vector<Triple> r;
    for (const Box& u : column_diagram(mu)) {
        Box w{u.col, u.row - 1};
        for (const Box& v : arm_left_boxes(mu, u))
            r.push_back(Triple{u, v, w, Triple::Kind::II});
        for (const Box& v : arm_right_boxes(mu, u))
            r.push_back(Triple{u, v, w, Triple::Kind::I});
    }
    return r;
}

// ---------------------------------------------------------------------------
// Bruhat order via downward closure.  Down-sets are cached per upper bound;
// every generator preserves the part sum, so distinct sums are incomparable.

namespace {

std::set<std::vector<int>> down_set(const std::vector<int>& top) {
    std::set<std::vector<int>> seen{top};
    std::deque<std::vector<int>> queue{top};
    const int n = static_cast<int>(top.size());
    while (!queue.empty()) {
        std::vector<int> v = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (v[i] < v[j]) {
                    std::vector<int> w = v;
                    std::swap(w[i], w[j]);
                    if (seen.insert(w).second) queue.push_back(std::move(w));
                }
                if (v[i] > v[j] + 1) {
                    std::vector<int> w = v;
                    w[i] = v[j] + 1;
                    w[j] = v[i] - 1;
                    if (seen.insert(w).second) queue.push_back(std::move(w));
                }
            }
    }
    return seen;
}

}  // namespace

bool bruhat_leq(const Composition& a, const Composition& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("bruhat_leq needs equal-length compositions");
    if (a == b) return true;
    if (a.sum() != b.sum()) return false;

    static std::map<std::vector<int>, std::set<std::vector<int>>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(b.parts);
    if (it == cache.end()) it = cache.emplace(b.parts, down_set(b.parts)).first;
    return it->second.count(a.parts) > 0;
}

Composition pi_shift(const Composition& mu) {
    std::vector<int> p;
    p.reserve(mu.n());
    p.push_back(mu.parts.back() + 1);
    p.insert(p.end(), mu.parts.begin(), mu.parts.end() - 1);
    return Composition(std::move(p));
}

Composition pi_inverse(const Composition& mu) {
    if (mu.parts.front() < 1)
        throw std::invalid_argument("pi_inverse needs a positive first part");
    std::vector<int> p(mu.parts.begin() + 1, mu.parts.end());
    p.push_back(mu.parts.front() - 1);
    return Composition(std::move(p));
}

Composition s_i(const Composition& mu, int i) {
    if (i < 1 || i >= mu.n()) throw std::invalid_argument("s_i index out of range");
    std::vector<int> p = mu.parts;
    std::swap(p[i - 1], p[i]);
    return Composition(std::move(p));
}

Box pi_box(int n, const Box& u) {
    if (u.col < 1 || u.col > n) throw std::invalid_argument("pi_box column out of range");
    if (u.col < n) return Box{u.col + 1, u.row};
    return Box{1, u.row + 1};
}

int pi_value(int n, int v) {
    if (v < 1 || v > n) throw std::invalid_argument("pi_value out of range");
    return v < n ? v + 1 : 1;
}

}  // namespace nsmac
