#ifndef CARC_TEST_UTIL_HPP
#define CARC_TEST_UTIL_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "carc/io.hpp"
#include "carc/model.hpp"

// build a model from "s0 t0 s1 t1" style token strings
inline carc::CircularArcModel mk(int n, const std::string& tokens) {
    std::istringstream ss(std::to_string(n) + "\n" + tokens + "\n");
    return carc::parse_model(ss);
}

// every circular order of 2n extremes up to rotation (s0 pinned first)
template <typename Fn>
void for_each_model(int n, Fn&& fn) {
    using carc::Extreme;
    using carc::ExtremeKind;
    std::vector<Extreme> rest;
    for (int a = 0; a < n; a++) {
        if (a > 0) rest.push_back({a, ExtremeKind::Beginning});
        rest.push_back({a, ExtremeKind::Ending});
    }
    auto cmp = [](const Extreme& x, const Extreme& y) {
        return std::pair(x.arc, (int)x.kind) < std::pair(y.arc, (int)y.kind);
    };
    std::sort(rest.begin(), rest.end(), cmp);
    do {
        std::vector<Extreme> ord;
        ord.reserve(2 * n);
        ord.push_back({0, ExtremeKind::Beginning});
        ord.insert(ord.end(), rest.begin(), rest.end());
        fn(carc::CircularArcModel(std::move(ord)));
    } while (std::next_permutation(rest.begin(), rest.end(), cmp));
}

#endif
