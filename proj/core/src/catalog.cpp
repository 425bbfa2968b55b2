#include "octobil/catalog.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

#include "octobil/element.hpp"

namespace octobil {

namespace {

Element slot(std::span<const Rational> v, int idx) {
    std::vector<Rational> c(v.begin() + idx * 8, v.begin() + (idx + 1) * 8);
    return Element(8, std::move(c));
}

template <typename... Es>
std::vector<Rational> cat(const Es&... parts) {
    std::vector<Rational> out;
    out.reserve((parts.level() + ...));
    (out.insert(out.end(), parts.coords().begin(), parts.coords().end()), ...);
    return out;
}

MapPtr algebra_mul(const std::string& id, int level, const std::string& desc) {
    auto eval = [level](std::span<const Rational> x, std::span<const Rational> y) {
        std::vector<Rational> out(static_cast<size_t>(level));
        mul_coords(x, y, out);
        return out;
    };
    return std::make_shared<BilinearMap>(id, SlotStructure{level, 1}, SlotStructure{level, 1}, level,
                                         std::move(eval), desc);
}

MapPtr make_commutator_map() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        return commutator(slot(x, 0), slot(y, 0)).coords();
    };
    return std::make_shared<BilinearMap>("commutator_map", SlotStructure{8, 1}, SlotStructure{8, 1},
                                         8, std::move(eval), "octonion commutator ab - ba");
}

MapPtr make_intro_f_deg1() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        return std::vector<Rational>{x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[1] * y[1]};
    };
    return std::make_shared<BilinearMap>("intro_f_deg1", SlotStructure{1, 2}, SlotStructure{1, 2}, 3,
                                         std::move(eval), "degree-1 real polynomial product");
}

MapPtr make_intro_g() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        return std::vector<Rational>{x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
    };
    return std::make_shared<BilinearMap>("intro_g", SlotStructure{1, 2}, SlotStructure{1, 2}, 2,
                                         std::move(eval), "complex product written on R^2 x R^2");
}

MapPtr make_lam_map() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        Element a0 = slot(x, 0), a1 = slot(x, 1);
        Element b0 = slot(y, 0), b1 = slot(y, 1);
        return cat(mul(a0, b0) - mul(conj(b1), a1),
                   mul(b1, a0) + mul(a1, conj(b0)),
                   mul(a1, b1) - mul(b1, a1));
    };
    return std::make_shared<BilinearMap>("lam_map", SlotStructure{8, 2}, SlotStructure{8, 2}, 24,
                                         std::move(eval),
                                         "octonion polynomial-style product K^2 x K^2 -> K^3");
}

MapPtr make_adem_map() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        Element a0 = slot(x, 0), a1 = slot(x, 1), a2 = slot(x, 2);
        Element b0 = slot(y, 0), b1 = slot(y, 1), b2 = slot(y, 2);
        return cat(mul(a0, b0) + mul(a1, b1),
                   mul(conj(b0), a2) - mul(a0, conj(b2)),
                   mul(conj(b0), a1) - mul(a0, conj(b1)) + mul(a2, b2),
                   mul(conj(b1), a2) - mul(a1, conj(b2)),
                   mul(a0, b0) - mul(b0, a0));
    };
    return std::make_shared<BilinearMap>("adem_map", SlotStructure{8, 3}, SlotStructure{8, 3}, 40,
                                         std::move(eval), "commutator-based K^3 x K^3 -> K^5");
}

MapPtr make_f1() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        Element a0 = slot(x, 0), a1 = slot(x, 1), a2 = slot(x, 2);
        Element b0 = slot(y, 0), b1 = slot(y, 1), b2 = slot(y, 2);
        return cat(mul(a0, b0) - mul(b0, a0),
                   mul(conj(b0), a1) + mul(a0, conj(b1)),
                   mul(conj(b0), a2) + mul(a1, b1) + mul(a0, conj(b2)),
                   mul(a2, conj(b1)) - mul(conj(b2), a1),
                   mul(a2, b2) - mul(a0, b0));
    };
    return std::make_shared<BilinearMap>("f1", SlotStructure{8, 3}, SlotStructure{8, 3}, 40,
                                         std::move(eval), "K^3 x K^3 -> K^5");
}

MapPtr make_f2() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        Element a0 = slot(x, 0), a1 = slot(x, 1), a2 = slot(x, 2), a3 = slot(x, 3);
        Element b0 = slot(y, 0), b1 = slot(y, 1);
        return cat(mul(a0, b0) - mul(b0, a0),
                   mul(conj(b0), a1) + mul(a0, conj(b1)),
                   mul(conj(b0), a2) + mul(a1, b1),
                   mul(a2, conj(b1)) + mul(b0, a3),
                   mul(a3, b1) - mul(a0, b0));
    };
    return std::make_shared<BilinearMap>("f2", SlotStructure{8, 4}, SlotStructure{8, 2}, 40,
                                         std::move(eval), "K^4 x K^2 -> K^5");
}

MapPtr make_f3() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        Element a0 = slot(x, 0), a1 = slot(x, 1);
        Element b0 = slot(y, 0), b1 = slot(y, 1), b2 = slot(y, 2), b3 = slot(y, 3);
        return cat(mul(a0, b0) - mul(b0, a0),
                   mul(conj(b0), a1) + mul(a0, conj(b1)),
                   mul(a1, b1) + mul(a0, conj(b2)),
                   mul(conj(a0), b3) - mul(conj(b2), a1),
                   -(mul(b3, conj(a1))) - mul(a0, b0));
    };
    return std::make_shared<BilinearMap>("f3", SlotStructure{8, 2}, SlotStructure{8, 4}, 40,
                                         std::move(eval), "K^2 x K^4 -> K^5");
}

MapPtr make_main_f() {
    auto eval = [](std::span<const Rational> x, std::span<const Rational> y) {
        Element a0 = slot(x, 0), a1 = slot(x, 1), a2 = slot(x, 2), a3 = slot(x, 3);
        Element b0 = slot(y, 0), b1 = slot(y, 1), b2 = slot(y, 2), b3 = slot(y, 3);
        return cat(mul(a0, b0) - mul(b0, a0),
                   mul(conj(b0), a1) + mul(a0, conj(b1)),
                   mul(conj(b0), a2) + mul(a1, b1) + mul(a0, conj(b2)),
                   mul(conj(a0), b3) - mul(conj(b2), a1) + mul(a2, conj(b1)) + mul(b0, a3),
                   -(mul(b3, conj(a1))) + mul(a2, b2) + mul(a3, b1) - mul(a0, b0),
                   mul(a3, b2) + mul(a2, b3),
                   mul(a3, b3));
    };
    return std::make_shared<BilinearMap>("main_f", SlotStructure{8, 4}, SlotStructure{8, 4}, 56,
                                         std::move(eval), "K^4 x K^4 -> K^7");
}

std::pair<int, int> parse_params(const std::string& id, const std::string& prefix) {
    // id looks like prefix(r,s)
    const std::string inner = id.substr(prefix.size() + 1, id.size() - prefix.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("builtin: expected '" + prefix + "(r,s)', got '" + id + "'");
    int r = 0, s = 0;
    auto rs = std::from_chars(inner.data(), inner.data() + comma, r);
    auto ss = std::from_chars(inner.data() + comma + 1, inner.data() + inner.size(), s);
    if (rs.ec != std::errc() || rs.ptr != inner.data() + comma || ss.ec != std::errc() ||
        ss.ptr != inner.data() + inner.size())
        throw std::invalid_argument("builtin: bad parameters in '" + id + "'");
    return {r, s};
}

}  // namespace

MapPtr make_poly_mul(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("poly_mul: r, s must be >= 1");
    auto eval = [r, s](std::span<const Rational> x, std::span<const Rational> y) {
        std::vector<Rational> out(static_cast<size_t>(r + s - 1));
        for (int i = 0; i < r; ++i) {
            if (x[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < s; ++j)
                out[static_cast<size_t>(i + j)] += x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        }
        return out;
    };
    const std::string id = "poly_mul(" + std::to_string(r) + "," + std::to_string(s) + ")";
    return std::make_shared<BilinearMap>(id, SlotStructure{1, r}, SlotStructure{1, s}, r + s - 1,
                                         std::move(eval), "real polynomial coefficient product");
}

MapPtr make_complex_poly_mul(int r, int s) {
    if (r < 2 || s < 2 || r % 2 != 0 || s % 2 != 0)
        throw std::invalid_argument("complex_poly_mul: r, s must be positive and even");
    const int dr = r / 2, ds = s / 2;
    auto eval = [dr, ds, r, s](std::span<const Rational> x, std::span<const Rational> y) {
        std::vector<Rational> out(static_cast<size_t>(r + s - 2));
        for (int i = 0; i < dr; ++i) {
            const Rational& xr = x[static_cast<size_t>(2 * i)];
            const Rational& xi = x[static_cast<size_t>(2 * i + 1)];
            if (xr.is_zero() && xi.is_zero()) continue;
            for (int j = 0; j < ds; ++j) {
                const Rational& yr = y[static_cast<size_t>(2 * j)];
                const Rational& yi = y[static_cast<size_t>(2 * j + 1)];
                out[static_cast<size_t>(2 * (i + j))] += xr * yr - xi * yi;
                out[static_cast<size_t>(2 * (i + j) + 1)] += xr * yi + xi * yr;
            }
        }
        return out;
    };
    const std::string id = "complex_poly_mul(" + std::to_string(r) + "," + std::to_string(s) + ")";
    return std::make_shared<BilinearMap>(id, SlotStructure{2, dr}, SlotStructure{2, ds}, r + s - 2,
                                         std::move(eval), "complex polynomial coefficient product");
}

const std::vector<std::string>& builtin_ids() {
    static const std::vector<std::string> ids = {
        "real_mul", "complex_mul", "quaternion_mul", "octonion_mul", "commutator_map",
        "intro_f_deg1", "intro_g", "lam_map", "adem_map", "f1", "f2", "f3", "main_f",
    };
    return ids;
}

MapPtr builtin(const std::string& id) {
    static std::mutex mtx;
    static std::map<std::string, MapPtr> registry;
    std::lock_guard<std::mutex> lock(mtx);

    auto it = registry.find(id);
    if (it != registry.end()) return it->second;

    MapPtr m;
    if (id == "real_mul") m = algebra_mul(id, 1, "real multiplication");
    else if (id == "complex_mul") m = algebra_mul(id, 2, "complex multiplication");
    else if (id == "quaternion_mul") m = algebra_mul(id, 4, "quaternion multiplication");
    else if (id == "octonion_mul") m = algebra_mul(id, 8, "octonion multiplication");
    else if (id == "commutator_map") m = make_commutator_map();
    else if (id == "intro_f_deg1") m = make_intro_f_deg1();
    else if (id == "intro_g") m = make_intro_g();
    else if (id == "lam_map") m = make_lam_map();
    else if (id == "adem_map") m = make_adem_map();
    else if (id == "f1") m = make_f1();
    else if (id == "f2") m = make_f2();
    else if (id == "f3") m = make_f3();
    else if (id == "main_f") m = make_main_f();
    else if (id.starts_with("poly_mul(") && id.ends_with(")")) {
        auto [r, s] = parse_params(id, "poly_mul");
        m = make_poly_mul(r, s);
    } else if (id.starts_with("complex_poly_mul(") && id.ends_with(")")) {
        auto [r, s] = parse_params(id, "complex_poly_mul");
        m = make_complex_poly_mul(r, s);
    } else {
        throw std::invalid_argument("builtin: unknown map id '" + id + "'");
    }
    registry.emplace(m->id(), m);
    return m;
}

}  // namespace octobil
