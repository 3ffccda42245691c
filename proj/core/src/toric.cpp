#include "gtv/toric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "gtv/errors.hpp"

namespace gtv {

namespace {

using FiberMap = std::unordered_map<ExponentVector, std::vector<IndexMultiset>, ExponentVectorHash>;

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Smaller root wins so component ids are stable under member order.
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
    std::vector<std::size_t> parent;
};

bool share_index(const IndexMultiset& a, const IndexMultiset& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        (a[i] < b[j]) ? ++i : ++j;
    }
    return false;
}

// Members adjacent iff they share a generator index; union via per-index
// buckets is linear in total member size, no pairwise scan.
UnionFind member_components(const std::vector<IndexMultiset>& members) {
    UnionFind uf(members.size());
    std::unordered_map<int, std::size_t> first_member_with;
    for (std::size_t m = 0; m < members.size(); ++m) {
        for (std::size_t p = 0; p < members[m].size(); ++p) {
            if (p > 0 && members[m][p] == members[m][p - 1]) continue;
            auto [it, inserted] = first_member_with.emplace(members[m][p], m);
            if (!inserted) uf.unite(it->second, m);
        }
    }
    return uf;
}

std::size_t component_count(const std::vector<IndexMultiset>& members) {
    UnionFind uf = member_components(members);
    std::size_t count = 0;
    for (std::size_t m = 0; m < members.size(); ++m) {
        if (uf.find(m) == m) ++count;
    }
    return count;
}

void enumerate_chunk(const std::vector<ExponentVector>& basis, int k, std::size_t first_lo,
                     std::size_t first_hi, FiberMap& out) {
    const std::size_t nv = basis.empty() ? 0 : basis[0].nvars();
    std::vector<int> chosen(static_cast<std::size_t>(k));
    std::vector<int> product(nv, 0);

    auto add = [&](std::size_t i, int sign) {
        for (std::size_t v = 0; v < nv; ++v) product[v] += sign * basis[i][v];
    };
    auto rec = [&](auto&& self, int depth, std::size_t min_index) -> void {
        if (depth == k) {
            out[ExponentVector(product)].push_back(chosen);
            return;
        }
        for (std::size_t i = min_index; i < basis.size(); ++i) {
            chosen[static_cast<std::size_t>(depth)] = static_cast<int>(i);
            add(i, +1);
            self(self, depth + 1, i);
            add(i, -1);
        }
    };
    for (std::size_t first = first_lo; first < first_hi; ++first) {
        chosen[0] = static_cast<int>(first);
        add(first, +1);
        rec(rec, 1, first);
        add(first, -1);
    }
}

ExponentVector product_of(const std::vector<ExponentVector>& basis, const IndexMultiset& indices) {
    std::vector<int> exps(basis.empty() ? 0 : basis[0].nvars(), 0);
    for (int i : indices) {
        for (std::size_t v = 0; v < exps.size(); ++v) exps[v] += basis[static_cast<std::size_t>(i)][v];
    }
    return ExponentVector(std::move(exps));
}

// All size-k index multisets whose product equals key, by divisor
// backtracking over the basis (ascending indices).
std::vector<IndexMultiset> fiber_members_of(const std::vector<ExponentVector>& basis,
                                            const ExponentVector& key, int k) {
    std::vector<IndexMultiset> members;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));

    auto rec = [&](auto&& self, std::size_t min_index, const ExponentVector& remaining) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            if (remaining.degree() == 0) members.push_back(chosen);
            return;
        }
        for (std::size_t i = min_index; i < basis.size(); ++i) {
            if (!basis[i].divides(remaining)) continue;
            chosen.push_back(static_cast<int>(i));
            self(self, i, remaining / basis[i]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, key);
    return members;
}

void check_cap(const BigInt& total, const ToricOptions& options, int k) {
    if (total <= BigInt(options.multiset_cap)) return;
    std::ostringstream msg;
    msg << "fiber enumeration at k=" << k << " needs " << total << " multisets, cap is "
        << options.multiset_cap;
    const std::uint64_t u64max = ~0ull;
    const std::uint64_t estimated =
        (total <= BigInt(u64max)) ? static_cast<std::uint64_t>(total) : u64max;
    throw ResourceBound(msg.str(), estimated, options.multiset_cap);
}

}  // namespace

std::vector<Fiber> enumerate_fibers(const GroupSpec& spec, int k, const ToricOptions& options) {
    if (k < 2) throw Error("enumerate_fibers: k must be >= 2");

    const auto basis = enumerate_invariants(spec, 1).monomials;
    const std::size_t mu = basis.size();
    check_cap(binom(static_cast<long long>(mu) + k - 1, k), options, k);

    const std::size_t threads =
        std::min<std::size_t>(std::max(options.threads, 1), std::max<std::size_t>(mu, 1));
    FiberMap merged;
    if (threads <= 1) {
        enumerate_chunk(basis, k, 0, mu, merged);
    } else {
        // Chunk by first (smallest) index; each multiset lands in exactly one
        // chunk, so merging is pure concatenation and the final sorts make the
        // result independent of the partition.
        std::vector<FiberMap> locals(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t lo = mu * t / threads;
            const std::size_t hi = mu * (t + 1) / threads;
            pool.emplace_back(enumerate_chunk, std::cref(basis), k, lo, hi, std::ref(locals[t]));
        }
        for (auto& th : pool) th.join();
        for (auto& local : locals) {
            for (auto& [key, members] : local) {
                auto& dst = merged[key];
                dst.insert(dst.end(), std::make_move_iterator(members.begin()),
                           std::make_move_iterator(members.end()));
            }
        }
    }

    std::vector<Fiber> fibers;
    fibers.reserve(merged.size());
    for (auto& [key, members] : merged) {
        std::sort(members.begin(), members.end());
        fibers.push_back(Fiber{key, std::move(members)});
    }
    std::sort(fibers.begin(), fibers.end(),
              [](const Fiber& a, const Fiber& b) { return listing_less(a.key, b.key); });
    return fibers;
}

FiberGraph analyze_fiber(const Fiber& fiber) {
    FiberGraph graph{fiber, {}, {}};
    const auto& members = fiber.members;
    for (std::size_t u = 0; u < members.size(); ++u) {
        for (std::size_t v = u + 1; v < members.size(); ++v) {
            if (share_index(members[u], members[v])) {
                graph.adjacency.emplace_back(static_cast<int>(u), static_cast<int>(v));
            }
        }
    }

    UnionFind uf(members.size());
    for (const auto& [u, v] : graph.adjacency) {
        uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    std::unordered_map<std::size_t, std::size_t> comp_of_root;
    for (std::size_t m = 0; m < members.size(); ++m) {
        const std::size_t root = uf.find(m);
        auto [it, inserted] = comp_of_root.emplace(root, graph.components.size());
        if (inserted) graph.components.emplace_back();
        graph.components[it->second].push_back(static_cast<int>(m));
    }
    // Roots are minima of their components and members ascend, so components
    // are already ordered by smallest member; keep that explicit anyway.
    std::sort(graph.components.begin(), graph.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return graph;
}

bool has_sequence(const GroupSpec& spec, const SuitableBinomial& b) {
    if (b.plus.size() != b.minus.size() || b.plus.empty()) {
        throw Error("has_sequence: plus/minus must be nonempty and of equal size");
    }
    const auto basis = enumerate_invariants(spec, 1).monomials;
    for (int i : b.plus) {
        if (i < 0 || static_cast<std::size_t>(i) >= basis.size()) {
            throw Error("has_sequence: generator index out of range");
        }
    }
    for (int i : b.minus) {
        if (i < 0 || static_cast<std::size_t>(i) >= basis.size()) {
            throw Error("has_sequence: generator index out of range");
        }
    }
    const ExponentVector key = product_of(basis, b.plus);
    if (!(key == product_of(basis, b.minus))) {
        throw Error("has_sequence: binomial is not suitable (products differ)");
    }

    const int k = static_cast<int>(b.plus.size());
    const auto members = fiber_members_of(basis, key, k);
    UnionFind uf = member_components(members);

    auto member_position = [&](const IndexMultiset& m) {
        auto sorted = m;
        std::sort(sorted.begin(), sorted.end());
        const auto it = std::lower_bound(members.begin(), members.end(), sorted);
        if (it == members.end() || *it != sorted) {
            throw Error("has_sequence: side is not a member of its own fiber");
        }
        return static_cast<std::size_t>(it - members.begin());
    };
    return uf.find(member_position(b.plus)) == uf.find(member_position(b.minus));
}

BigInt minimal_generator_count(const GroupSpec& spec, int k, const ToricOptions& options) {
    if (k != 2 && k != 3) {
        throw Error("minimal_generator_count: only degrees 2 and 3 carry minimal generators");
    }
    const auto fibers = enumerate_fibers(spec, k, options);
    BigInt count = 0;
    for (const auto& fiber : fibers) {
        if (k == 2) {
            count += static_cast<std::uint64_t>(fiber.members.size() - 1);
        } else if (fiber.members.size() > 1) {
            count += static_cast<std::uint64_t>(component_count(fiber.members) - 1);
        }
    }
    return count;
}

DegreeBoundCertification certify_degree_bound(const GroupSpec& spec, int k_max,
                                              const ToricOptions& options) {
    if (k_max < 4) throw Error("certify_degree_bound: k_max must be >= 4");

    DegreeBoundCertification cert;
    cert.k_min = 4;
    cert.k_max = k_max;
    for (int k = 4; k <= k_max; ++k) {
        for (const auto& fiber : enumerate_fibers(spec, k, options)) {
            ++cert.fibers_checked;
            if (fiber.members.size() > 1 && component_count(fiber.members) > 1) {
                cert.disconnected.emplace_back(k, fiber.key);
            }
        }
    }
    cert.certified = cert.disconnected.empty();
    return cert;
}

GeneratorSets generators(const GroupSpec& spec, const ToricOptions& options) {
    GeneratorSets out;

    for (const auto& fiber : enumerate_fibers(spec, 2, options)) {
        for (std::size_t i = 1; i < fiber.members.size(); ++i) {
            out.quadrics.push_back(SuitableBinomial{fiber.members[0], fiber.members[i], 2});
        }
    }

    for (const auto& fiber : enumerate_fibers(spec, 3, options)) {
        if (fiber.members.size() < 2) continue;
        const FiberGraph graph = analyze_fiber(fiber);
        for (std::size_t c = 1; c < graph.components.size(); ++c) {
            const auto& rep0 = fiber.members[static_cast<std::size_t>(graph.components[0].front())];
            const auto& rep = fiber.members[static_cast<std::size_t>(graph.components[c].front())];
            out.cubics.push_back(SuitableBinomial{rep0, rep, 3});
        }
    }
    return out;
}

}  // namespace gtv
