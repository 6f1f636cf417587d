#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubic_form.hpp"
#include "hurwitzian_sets.hpp"
#include "identities.hpp"
#include "polarization.hpp"
#include "quadruples.hpp"
#include "twisted_algebra.hpp"
#include "vecset.hpp"

namespace hurwitz {

using Json = nlohmann::ordered_json;

namespace detail {

template <class Fn>
auto json_guard(Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
}

} // namespace detail

inline Json to_json(const CubicForm& f)
{
    return Json{{"n", f.dim()}, {"monomials", f.index_sets()}};
}

inline CubicForm cubic_from_json(const Json& j)
{
    return detail::json_guard([&] {
        return CubicForm::from_index_sets(j.at("n").get<int>(), j.at("monomials").get<std::vector<IndexSet>>());
    });
}

inline Json to_json(const TwistFn& f)
{
    Json ms = Json::array();
    for (const auto& m : f.monomials())
        ms.push_back(Json::array({mask_indices(f.dim(), m.x_mask), mask_indices(f.dim(), m.y_mask)}));
    return Json{{"n", f.dim()}, {"monomials", ms}};
}

inline TwistFn twist_from_json(const Json& j)
{
    return detail::json_guard([&] {
        std::vector<std::pair<IndexSet, IndexSet>> ms;
        for (const auto& m : j.at("monomials")) ms.emplace_back(m.at(0).get<IndexSet>(), m.at(1).get<IndexSet>());
        return TwistFn::from_index_sets(j.at("n").get<int>(), ms);
    });
}

inline Json to_json(const VecSet& s)
{
    Json out = Json::array();
    for (auto x : s) out.push_back(to_string(x));
    return out;
}

inline VecSet vecset_from_json(const Json& j)
{
    return detail::json_guard([&] {
        std::vector<BitVec> v;
        for (const auto& e : j) v.push_back(parse_bitvec(e.get<std::string>()));
        if (v.empty()) throw ParseError("empty vector set");
        return VecSet(v.front().dim(), v);
    });
}

template <class Int>
Json to_json(const AlgebraElement<Int>& a)
{
    Json terms = Json::array();
    for (const auto& [x, c] : a.coeffs()) {
        Json t{{"basis", to_string(BitVec(a.dim(), x))}};
        if constexpr (std::integral<Int>) t["coeff"] = c;
        else t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return Json{{"n", a.dim()}, {"terms", terms}};
}

inline AlgebraElement<std::int64_t> algebra_element_from_json(const Json& j)
{
    return detail::json_guard([&] {
        const int n = j.at("n").get<int>();
        AlgebraElement<std::int64_t> a(n);
        for (const auto& t : j.at("terms")) {
            const auto x = parse_bitvec(t.at("basis").get<std::string>());
            require_same_dim(n, x.dim());
            a.add(x, t.at("coeff").get<std::int64_t>());
        }
        return a;
    });
}

inline Json to_json(const Identity& id)
{
    const auto sz = id.size();
    Json terms = Json::object();
    for (const auto& [z, ts] : id.buckets()) {
        Json arr = Json::array();
        for (const auto& t : ts) arr.push_back(Json{{"s", t.sign}, {"x", to_string(t.x)}, {"y", to_string(t.y)}});
        terms[to_string(z)] = std::move(arr);
    }
    return Json{{"size", {sz[0], sz[1], sz[2]}}, {"terms", terms}};
}

inline Identity identity_from_json(const Json& j)
{
    return detail::json_guard([&] {
        Identity::Buckets buckets;
        std::vector<BitVec> xs, ys;
        for (const auto& [key, arr] : j.at("terms").items()) {
            auto& bucket = buckets[parse_bitvec(key)];
            for (const auto& t : arr) {
                const auto x = parse_bitvec(t.at("x").get<std::string>());
                const auto y = parse_bitvec(t.at("y").get<std::string>());
                bucket.push_back({t.at("s").get<int>(), x, y});
                xs.push_back(x);
                ys.push_back(y);
            }
        }
        if (xs.empty()) throw ParseError("identity has no terms");
        auto uniq = [](std::vector<BitVec> v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return VecSet(v.front().dim(), v);
        };
        Identity id(uniq(xs), uniq(ys), std::move(buckets));
        if (j.contains("size")) {
            const auto declared = j.at("size").get<std::vector<std::size_t>>();
            const auto actual = id.size();
            if (declared != std::vector<std::size_t>(actual.begin(), actual.end()))
                throw ParseError("declared size does not match the terms");
        }
        return id;
    });
}

inline Json to_json(const PropertyCheck& c)
{
    return Json{{"holds", c.holds}, {"exhaustive", c.exhaustive}, {"cases", c.cases}};
}

inline Json to_json(const PropertyReport& r)
{
    return Json{{"a_first_polarization", to_json(r.commutator)},
                {"b_second_polarization", to_json(r.associator)},
                {"c_linear_in_second", to_json(r.linear_second)},
                {"d_reconstruction", to_json(r.diagonal)},
                {"all", r.all()}};
}

inline Json to_json(const QuadrupleReport& r)
{
    return Json{{"proper_count", r.proper_count},
                {"counting", r.mode == QuadrupleCount::ordered ? "ordered" : "unordered"},
                {"hypothesis_holds", r.hypothesis_holds},
                {"sumset_size", r.sumset_size},
                {"size_a", r.size_a},
                {"size_b", r.size_b},
                {"ratio", r.ratio},
                {"swapped", r.swapped},
                {"unequal_sizes", r.unequal_sizes}};
}

inline Json to_json(const ConjectureReport& r)
{
    Json dist = Json::object();
    for (const auto& [m, c] : r.distribution) dist[std::to_string(m)] = c;
    return Json{{"n", r.n},         {"forms", r.forms},       {"global_max", r.global_max},
                {"bound", 2 * r.n}, {"holds", r.holds},       {"alpha_O_max", r.alpha_O_max},
                {"zero_form_max", r.zero_form_max}, {"distribution", dist}};
}

} // namespace hurwitz
