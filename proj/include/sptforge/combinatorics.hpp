#pragma once

#include <sptforge/sptcrank.hpp>

#include <functional>
#include <vector>

namespace sptforge {

// Parts in nonincreasing order.
struct Partition {
    std::vector<int> parts;

    int size() const;
    int smallest() const; // 0 for the empty partition
    int smallest_count() const;
};

// Plain parts nonincreasing, overlined parts strictly decreasing.
struct Overpartition {
    std::vector<int> plain;
    std::vector<int> overlined;
};

// Visits partitions of n in decreasing lexicographic order: 4, 3+1, 2+2, ...
void for_each_partition(int n, const std::function<void(const Partition &)> &f);
// Partitions of n into distinct parts, same order.
void for_each_distinct_partition(int n, const std::function<void(const Partition &)> &f);
void for_each_overpartition(int n, const std::function<void(const Overpartition &)> &f);

std::vector<Partition> enumerate_partitions(int n);

// spt(n): partitions weighted by the multiplicity of the smallest part.
BigInt classic_spt(int n);

// spt_X(n) by exhaustive enumeration of the objects each family counts.
// Only the seven main families have an interpretation.
BigInt spt_oracle(Family family, int n);

struct FiberReport {
    int n = 0;
    long j1_size = 0;
    long j2_size = 0;
    long j3_size = 0;
    BigInt spt_j1;
    BigInt spt_j2;
    BigInt spt_j3;
    bool images_in_j1 = true;
    bool j2_fibers = true; // every fiber has size floor((spt+1)/2)
    bool j3_fibers = true; // every fiber has size floor(spt/2)
    bool additive = true;  // spt_J1 = spt_J2 + spt_J3

    bool ok() const { return images_in_j1 && j2_fibers && j3_fibers && additive; }
};

// Splits each part 2s of a J2 (resp. J3) partition into s + s and checks the
// fibers over J1(n).
FiberReport j_fiber_check(int n);

// Membership tests for the sets J1(n), J2(n), J3(n).
bool in_j1(const Partition &p);
bool in_j2(const Partition &p);
bool in_j3(const Partition &p);

} // namespace sptforge
