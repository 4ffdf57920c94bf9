#include "polysparse/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <stdexcept>

namespace polysparse {

namespace {

struct Ray {
    QVector z;
    boost::dynamic_bitset<> zero;
};

} // namespace

ConeGenerators cone_generators(const std::vector<QVector>& constraints, std::size_t dim)
{
    const std::size_t m = constraints.size();
    std::vector<QVector> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        QVector e(dim);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<Ray> rays;

    for (std::size_t c = 0; c < m; ++c) {
        const QVector& h = constraints[c];
        if (h.size() != dim)
            throw std::invalid_argument("cone_generators: constraint dimension mismatch");

        std::size_t pivot = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(h, lin[i]) != 0) {
                pivot = i;
                break;
            }

        if (pivot < lin.size()) {
            // h cuts the lineality space: one lineality direction turns into a ray.
            QVector l0 = lin[pivot];
            Rational h0 = dot(h, l0);
            if (h0 > 0) {
                for (auto& x : l0)
                    x = -x;
                h0 = -h0;
            }
            auto project_out = [&](QVector& v) {
                const Rational s = dot(h, v);
                if (s == 0)
                    return;
                const Rational f = s / h0;
                for (std::size_t j = 0; j < dim; ++j)
                    if (l0[j] != 0)
                        v[j] -= f * l0[j];
                make_primitive(v);
            };
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pivot));
            for (auto& l : lin)
                project_out(l);
            for (auto& r : rays) {
                project_out(r.z);
                r.zero.set(c);
            }
            Ray fresh{std::move(l0), boost::dynamic_bitset<>(m)};
            for (std::size_t j = 0; j < c; ++j)
                fresh.zero.set(j);
            make_primitive(fresh.z);
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(h, rays[i].z);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
        }

        std::vector<Ray> next;
        const std::size_t need = dim >= lin.size() + 2 ? dim - lin.size() - 2 : 0;
        for (auto p : pos)
            for (auto q : neg) {
                boost::dynamic_bitset<> common = rays[p].zero & rays[q].zero;
                if (common.count() < need)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zero))
                        adjacent = false;
                if (!adjacent)
                    continue;
                // val[p] > 0 > val[q]; the combination is tight on h.
                QVector z(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    z[j] = val[p] * rays[q].z[j] - val[q] * rays[p].z[j];
                make_primitive(z);
                common.set(c);
                next.push_back(Ray{std::move(z), std::move(common)});
            }

        std::vector<Ray> kept;
        kept.reserve(rays.size() - pos.size() + next.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] > 0)
                continue;
            if (val[i] == 0)
                rays[i].zero.set(c);
            kept.push_back(std::move(rays[i]));
        }
        for (auto& r : next)
            kept.push_back(std::move(r));
        rays = std::move(kept);
    }

    ConeGenerators out;
    out.lineality = std::move(lin);
    for (auto& r : rays)
        out.rays.push_back(std::move(r.z));
    return out;
}

} // namespace polysparse
