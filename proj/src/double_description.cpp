#include "toric/double_description.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <utility>

namespace toric {

namespace {

struct Ray {
    IntVector v;
    std::vector<bool> zeros;  // zeros[j]: constraint j (processed so far) is tight on v
};

void make_primitive(IntVector& v) {
    const Integer g = content(v);
    if (g > 1) {
        for (auto& x : v) {
            x /= g;
        }
    }
}

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = a * x[i] + b * y[i];
    }
    make_primitive(out);
    return out;
}

bool is_subset(const std::vector<bool>& small, const std::vector<bool>& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] && !big[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

ConeGenerators double_description(const IntMatrix& constraints, std::size_t dim) {
    for (const auto& a : constraints) {
        if (a.size() != dim) {
            throw InputError("constraint length does not match cone dimension");
        }
    }
    IntMatrix lines;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, Integer(0));
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<Ray> rays;

    for (std::size_t j = 0; j < constraints.size(); ++j) {
        const IntVector& a = constraints[j];

        // A line not orthogonal to `a` is cut into a ray; every other
        // generator is translated along it onto the hyperplane a·x = 0.
        auto pivot = std::find_if(lines.begin(), lines.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
        if (pivot != lines.end()) {
            IntVector l = *pivot;
            lines.erase(pivot);
            Integer al = dot(a, l);
            if (al < 0) {
                for (auto& x : l) {
                    x = -x;
                }
                al = -al;
            }
            for (auto& other : lines) {
                const Integer ao = dot(a, other);
                if (ao != 0) {
                    other = combine(al, other, -ao, l);
                }
            }
            for (auto& r : rays) {
                const Integer ar = dot(a, r.v);
                if (ar != 0) {
                    r.v = combine(al, r.v, -ar, l);
                }
                r.zeros.push_back(true);
            }
            std::vector<bool> zeros(j, true);
            zeros.push_back(false);
            rays.push_back({std::move(l), std::move(zeros)});
            continue;
        }

        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> positive;
        std::vector<std::size_t> negative;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = dot(a, rays[k].v);
            if (value[k] > 0) {
                positive.push_back(k);
            } else if (value[k] < 0) {
                negative.push_back(k);
            }
        }

        std::vector<Ray> next;
        for (std::size_t p : positive) {
            for (std::size_t n : negative) {
                std::vector<bool> common(j);
                for (std::size_t c = 0; c < j; ++c) {
                    common[c] = rays[p].zeros[c] && rays[n].zeros[c];
                }
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k != p && k != n && is_subset(common, rays[k].zeros)) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                IntVector v = combine(value[p], rays[n].v, -value[n], rays[p].v);
                common.push_back(true);
                next.push_back({std::move(v), std::move(common)});
            }
        }
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (value[k] >= 0) {
                Ray r = std::move(rays[k]);
                r.zeros.push_back(value[k] == 0);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    ConeGenerators out;
    out.lines = std::move(lines);
    for (auto& r : rays) {
        out.rays.push_back(std::move(r.v));
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

}  // namespace toric
