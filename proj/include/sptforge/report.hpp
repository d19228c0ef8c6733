#pragma once

#include <sptforge/builders.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sptforge {

enum class Status { verified, mismatch };

std::string status_name(Status s);

struct VerificationReport {
    std::string id;
    int order = 0;
    Status status = Status::verified;
    std::optional<Mismatch> first_mismatch;
    long millis = 0;
    std::vector<std::string> notes;

    bool ok() const { return status == Status::verified; }
};

// Compares lhs and rhs and fills status and first_mismatch. With several
// component pairs the first failing component wins and is named in notes.
VerificationReport compare_sides(const std::string &id, const AnySeries &lhs, const AnySeries &rhs);
void merge_into(VerificationReport &acc, const VerificationReport &part, const std::string &label);

} // namespace sptforge
