#include <sptforge/combinatorics.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sptforge {

int Partition::size() const
{
    int s = 0;
    for (int p : parts) {
        s += p;
    }
    return s;
}

int Partition::smallest() const
{
    return parts.empty() ? 0 : parts.back();
}

int Partition::smallest_count() const
{
    if (parts.empty()) {
        return 0;
    }
    return static_cast<int>(std::count(parts.begin(), parts.end(), parts.back()));
}

namespace {

void partitions_rec(int rem, int max_part, bool distinct, Partition &cur,
                    const std::function<void(const Partition &)> &f)
{
    if (rem == 0) {
        f(cur);
        return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
        cur.parts.push_back(p);
        partitions_rec(rem - p, distinct ? p - 1 : p, distinct, cur, f);
        cur.parts.pop_back();
    }
}

void check_n(int n)
{
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition &)> &f)
{
    check_n(n);
    Partition cur;
    partitions_rec(n, n, false, cur, f);
}

void for_each_distinct_partition(int n, const std::function<void(const Partition &)> &f)
{
    check_n(n);
    Partition cur;
    partitions_rec(n, n, true, cur, f);
}

void for_each_overpartition(int n, const std::function<void(const Overpartition &)> &f)
{
    check_n(n);
    Overpartition op;
    for (int j = 0; j <= n; ++j) {
        for_each_distinct_partition(j, [&](const Partition &over) {
            op.overlined = over.parts;
            for_each_partition(n - j, [&](const Partition &plain) {
                op.plain = plain.parts;
                f(op);
            });
        });
    }
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition &p) { out.push_back(p); });
    return out;
}

BigInt classic_spt(int n)
{
    BigInt total;
    if (n <= 0) {
        return total;
    }
    for_each_partition(n, [&](const Partition &p) { total += BigInt(p.smallest_count()); });
    return total;
}

bool in_j1(const Partition &p)
{
    const int s = p.smallest();
    if (s == 0) {
        return false;
    }
    for (int x : p.parts) {
        if (!(x <= 2 * s - 1 || (x >= 3 * s && x % 3 == 0))) {
            return false;
        }
    }
    return true;
}

bool in_j2(const Partition &p)
{
    const int s = p.smallest();
    if (s == 0) {
        return false;
    }
    for (int x : p.parts) {
        if (!(x <= 2 * s || (x >= 3 * s && x % 3 == 0))) {
            return false;
        }
    }
    return true;
}

bool in_j3(const Partition &p)
{
    return in_j2(p) && p.smallest_count() >= 2;
}

namespace {

// Signed count of the admissible second components of size r for smallest
// part s of the first component.
long pi2_weight(Family family, int s, int r)
{
    long total = 0;
    for_each_overpartition(r, [&](const Overpartition &op) {
        for (int x : op.plain) {
            if (x % 2 != 0 || x < 2 * s + 2) {
                return;
            }
        }
        int low = 0;
        for (int x : op.overlined) {
            if (x < s + 1) {
                return;
            }
            if (family != Family::F3 && x >= 2 * s + 1 && x % 2 == 0) {
                return;
            }
            if (x < 2 * s + 1) {
                ++low;
            }
        }
        const int flips = family == Family::F3 ? static_cast<int>(op.overlined.size()) : low;
        total += flips % 2 == 0 ? 1 : -1;
    });
    return total;
}

// Weight of the first component, 0 if it is not admissible.
long pi1_weight(Family family, const Partition &p)
{
    const int s = p.smallest();
    const int c = p.smallest_count();
    switch (family) {
    case Family::F3:
        if (c % 2 == 0) {
            return 0;
        }
        for (int x : p.parts) {
            if (x >= 2 * s && x % 2 != 0) {
                return 0;
            }
        }
        return (c + 1) / 2;
    case Family::G4:
    case Family::AG4: {
        const int lo = family == Family::G4 ? s + 2 : s;
        if (c < lo || (c + s) % 2 != 0) {
            return 0;
        }
        for (int x : p.parts) {
            if (x > 2 * s && x % 2 != 0) {
                return 0;
            }
            if (x > 4 * s && x % 4 != 2) {
                return 0;
            }
        }
        const long w = family == Family::G4 ? (c - s) / 2 : (c - s + 2) / 2;
        return s % 2 == 0 ? w : -w;
    }
    default:
        break;
    }
    return 0;
}

BigInt pair_oracle(Family family, int n)
{
    std::map<std::pair<int, int>, long> second;
    BigInt total;
    for (int m = 1; m <= n; ++m) {
        for_each_partition(m, [&](const Partition &p) {
            const long w = pi1_weight(family, p);
            if (w == 0) {
                return;
            }
            const auto key = std::make_pair(p.smallest(), n - m);
            auto it = second.find(key);
            if (it == second.end()) {
                it = second.emplace(key, pi2_weight(family, key.first, key.second)).first;
            }
            total += BigInt(w * it->second);
        });
    }
    return total;
}

} // namespace

BigInt spt_oracle(Family family, int n)
{
    BigInt total;
    if (n <= 0) {
        return total;
    }
    switch (family) {
    case Family::B2:
        for_each_partition(n, [&](const Partition &p) { total += BigInt(p.smallest_count() - 1); });
        return total;
    case Family::J1:
        for_each_partition(n, [&](const Partition &p) {
            if (in_j1(p)) {
                total += BigInt(p.smallest_count());
            }
        });
        return total;
    case Family::J2:
    case Family::J3:
        for_each_partition(n, [&](const Partition &p) {
            if (family == Family::J2 ? in_j2(p) : in_j3(p)) {
                total += BigInt(1);
            }
        });
        return total;
    case Family::F3:
    case Family::G4:
    case Family::AG4:
        return pair_oracle(family, n);
    case Family::Gstar:
    case Family::Gstarstar:
        break;
    }
    throw std::invalid_argument("no combinatorial interpretation for " + family_name(family));
}

FiberReport j_fiber_check(int n)
{
    FiberReport r;
    r.n = n;
    std::map<std::vector<int>, long> from_j2, from_j3;
    for_each_partition(n, [&](const Partition &p) {
        const bool j1 = in_j1(p), j2 = in_j2(p), j3 = in_j3(p);
        if (j1) {
            ++r.j1_size;
            r.spt_j1 += BigInt(p.smallest_count());
        }
        if (!j2) {
            return;
        }
        const int s = p.smallest();
        Partition img;
        for (int x : p.parts) {
            if (x == 2 * s) {
                img.parts.push_back(s);
                img.parts.push_back(s);
            } else {
                img.parts.push_back(x);
            }
        }
        std::sort(img.parts.rbegin(), img.parts.rend());
        if (!in_j1(img)) {
            r.images_in_j1 = false;
        }
        ++r.j2_size;
        r.spt_j2 += BigInt(1);
        ++from_j2[img.parts];
        if (j3) {
            ++r.j3_size;
            r.spt_j3 += BigInt(1);
            ++from_j3[img.parts];
        }
    });
    for_each_partition(n, [&](const Partition &p) {
        if (!in_j1(p)) {
            return;
        }
        const int c = p.smallest_count();
        auto get = [&](const std::map<std::vector<int>, long> &m) {
            auto it = m.find(p.parts);
            return it == m.end() ? 0L : it->second;
        };
        if (get(from_j2) != (c + 1) / 2) {
            r.j2_fibers = false;
        }
        if (get(from_j3) != c / 2) {
            r.j3_fibers = false;
        }
    });
    r.additive = r.spt_j1 == r.spt_j2 + r.spt_j3;
    return r;
}

} // namespace sptforge
