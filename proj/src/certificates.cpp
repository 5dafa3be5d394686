#include "carc/certificates.hpp"

#include <algorithm>

#include "carc/generators.hpp"
#include "carc/oracle.hpp"

namespace carc {

const char* forbidden_kind_name(ForbiddenKind k) {
    switch (k) {
    case ForbiddenKind::K13: return "K13";
    case ForbiddenKind::W4: return "W4";
    case ForbiddenKind::S3: return "S3";
    case ForbiddenKind::Wheel: return "wheel";
    case ForbiddenKind::RisingSun: return "rising-sun";
    case ForbiddenKind::Umbrella: return "umbrella";
    case ForbiddenKind::Tent: return "tent";
    case ForbiddenKind::Hole: return "hole";
    case ForbiddenKind::AsteroidalTriple: return "asteroidal-triple";
    }
    return "?";
}

namespace {

bool path_avoiding(const Graph& g, int from, int to, const Bits& banned) {
    if (banned.test(from) || banned.test(to)) return false;
    int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (int u = 0; u < n; u++)
            if (g.adjacent(v, u) && !seen[u] && !banned.test(u)) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    return false;
}

} // namespace

bool verify_obstruction(const Graph& host, const Obstruction& ob) {
    const auto& vs = ob.vertices;
    for (int v : vs)
        if (v < 0 || v >= host.vertex_count()) return false;
    std::vector<int> uniq = vs;
    std::sort(uniq.begin(), uniq.end());
    if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) return false;

    switch (ob.kind) {
    case ForbiddenKind::Hole: {
        int k = (int)vs.size();
        if (k < 4) return false;
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++) {
                bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if (host.adjacent(vs[i], vs[j]) != consecutive) return false;
            }
        return true;
    }
    case ForbiddenKind::AsteroidalTriple: {
        if (vs.size() != 3) return false;
        for (int i = 0; i < 3; i++)
            for (int j = i + 1; j < 3; j++)
                if (host.adjacent(vs[i], vs[j])) return false;
        for (int i = 0; i < 3; i++) {
            int a = vs[(i + 1) % 3], b = vs[(i + 2) % 3], z = vs[i];
            Bits banned(host.vertex_count());
            banned.set(z);
            for (int u = 0; u < host.vertex_count(); u++)
                if (host.adjacent(z, u)) banned.set(u);
            if (!path_avoiding(host, a, b, banned)) return false;
        }
        return true;
    }
    case ForbiddenKind::K13:
    case ForbiddenKind::W4:
    case ForbiddenKind::S3:
    case ForbiddenKind::Wheel:
    case ForbiddenKind::RisingSun:
    case ForbiddenKind::Umbrella:
    case ForbiddenKind::Tent: {
        FamilySpec spec{};
        switch (ob.kind) {
        case ForbiddenKind::K13: spec = {Family::K13}; break;
        case ForbiddenKind::W4: spec = {Family::Wheel, 4}; break;
        case ForbiddenKind::S3:
        case ForbiddenKind::Wheel:
            if (ob.kind == ForbiddenKind::S3) spec = {Family::Sun3};
            else spec = {Family::Wheel, (int)vs.size() - 1};
            break;
        case ForbiddenKind::RisingSun: spec = {Family::RisingSun, (int)vs.size() - 3}; break;
        case ForbiddenKind::Umbrella: spec = {Family::Umbrella}; break;
        case ForbiddenKind::Tent: spec = {Family::Tent}; break;
        default: return false;
        }
        Graph pattern;
        try {
            pattern = named_graph(spec);
        } catch (const std::exception&) {
            return false;
        }
        if ((int)vs.size() != pattern.vertex_count()) return false;
        return is_isomorphic(induced_subgraph(host, vs), pattern);
    }
    }
    return false;
}

} // namespace carc
