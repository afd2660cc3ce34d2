#include "maxgraph/catalog.hpp"

#include <algorithm>
#include <map>

namespace maxgraph {

namespace {

ConeDirection flip(ConeDirection d) { return d == ConeDirection::Up ? ConeDirection::Down : ConeDirection::Up; }

ConeConfig flipped(ConeConfig c) {
    for (auto& d : c.dirs_pos)
        d = flip(d);
    for (auto& d : c.dirs_neg)
        d = flip(d);
    return c;
}

ConeConfig reversed(ConeConfig c) {
    std::reverse(c.dirs_pos.begin(), c.dirs_pos.end());
    std::reverse(c.dirs_neg.begin(), c.dirs_neg.end());
    return c;
}

ConeConfig swapped(ConeConfig c) {
    std::swap(c.m, c.n);
    std::swap(c.dirs_pos, c.dirs_neg);
    return c;
}

ConeConfig from_bits(int m, int n, unsigned bits) {
    ConeConfig c{m, n, {}, {}};
    for (int i = 0; i < m + n; ++i) {
        const ConeDirection d = (bits >> (m + n - 1 - i)) & 1u ? ConeDirection::Down : ConeDirection::Up;
        (i < m ? c.dirs_pos : c.dirs_neg).push_back(d);
    }
    return c;
}

}  // namespace

bool operator<(const ConeConfig& a, const ConeConfig& b) {
    auto key = [](const ConeConfig& c) {
        std::vector<int> k{c.m, c.n};
        for (auto d : c.dirs_pos)
            k.push_back(d == ConeDirection::Up ? 0 : 1);
        for (auto d : c.dirs_neg)
            k.push_back(d == ConeDirection::Up ? 0 : 1);
        return k;
    };
    return key(a) < key(b);
}

std::vector<std::pair<int, int>> enumerate_types(int total) {
    if (total < 1)
        throw Error(ErrorKind::InvalidArgument, "need at least one cone");
    std::vector<std::pair<int, int>> out;
    for (int n = 0; 2 * n <= total; ++n)
        out.push_back({total - n, n});
    return out;
}

std::vector<ConeConfig> orbit(const ConeConfig& c) {
    std::vector<ConeConfig> out;
    for (const ConeConfig& base : {c, reversed(c)}) {
        out.push_back(base);
        out.push_back(flipped(base));
        if (c.m == c.n) {
            out.push_back(swapped(base));
            out.push_back(swapped(flipped(base)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ConeConfig canonicalize(const ConeConfig& c) {
    if (static_cast<int>(c.dirs_pos.size()) != c.m || static_cast<int>(c.dirs_neg.size()) != c.n)
        throw Error(ErrorKind::LengthMismatch, "direction lists do not match (m, n)");
    const ConeConfig start = c.n > c.m ? swapped(c) : c;
    return orbit(start).front();
}

std::vector<CatalogClass> catalog_classes(int m, int n) {
    if (m < 1 || n < 0 || n > m)
        throw Error(ErrorKind::InvalidArgument, "catalog types need m >= n >= 0 and m >= 1");
    std::map<ConeConfig, int> sizes;
    const unsigned count = 1u << (m + n - 1);  // first positive cone up
    for (unsigned bits = 0; bits < count; ++bits)
        ++sizes[canonicalize(from_bits(m, n, bits))];
    std::vector<CatalogClass> out;
    for (const auto& [rep, size] : sizes)
        out.push_back({rep, size});
    return out;
}

SurfaceParams instantiate(const ConeConfig& c, double spacing) {
    if (!(spacing > 0.0))
        throw Error(ErrorKind::InvalidArgument, "spacing must be positive");
    RawParams raw;
    raw.m = c.m;
    raw.n = c.n;
    for (int j = 0; j < 2 * c.m; ++j)
        raw.a.push_back(1.0 + j * spacing);
    for (int k = 0; k < 2 * c.n; ++k)
        raw.b.push_back(-1.0 - k * spacing);
    for (auto d : c.dirs_pos)
        raw.alpha.push_back(d == ConeDirection::Up ? -1 : 1);
    for (auto d : c.dirs_neg)
        raw.beta.push_back(d == ConeDirection::Up ? 1 : -1);
    return SurfaceParams::validate(raw);
}

ConeConfig config_of(const SurfaceParams& p) {
    ConeConfig c{p.m(), p.n(), {}, {}};
    for (int s : p.alphas())
        c.dirs_pos.push_back(s == -1 ? ConeDirection::Up : ConeDirection::Down);
    for (int s : p.betas())
        c.dirs_neg.push_back(s == 1 ? ConeDirection::Up : ConeDirection::Down);
    return c;
}

nlohmann::json to_json(const ConeConfig& c) {
    nlohmann::json pos = nlohmann::json::array(), neg = nlohmann::json::array();
    for (auto d : c.dirs_pos)
        pos.push_back(to_string(d));
    for (auto d : c.dirs_neg)
        neg.push_back(to_string(d));
    return {{"m", c.m}, {"n", c.n}, {"positive", pos}, {"negative", neg}};
}

nlohmann::json catalog_json(int total) {
    nlohmann::json types = nlohmann::json::array();
    int grand = 0;
    for (const auto& [m, n] : enumerate_types(total)) {
        nlohmann::json classes = nlohmann::json::array();
        int index = 0;
        for (const auto& cls : catalog_classes(m, n)) {
            nlohmann::json j = to_json(cls.representative);
            j["class"] = ++index;
            j["class_size"] = cls.class_size;
            classes.push_back(j);
        }
        grand += index;
        types.push_back({{"m", m}, {"n", n}, {"count", index}, {"classes", classes}});
    }
    return {{"cones", total}, {"type_count", types.size()}, {"types", types}, {"total", grand}};
}

}  // namespace maxgraph
