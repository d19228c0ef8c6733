#include <sptforge/report.hpp>

namespace sptforge {

std::string status_name(Status s)
{
    return s == Status::verified ? "verified" : "mismatch";
}

VerificationReport compare_sides(const std::string &id, const AnySeries &lhs, const AnySeries &rhs)
{
    VerificationReport r;
    r.id = id;
    r.order = std::min(any_order(lhs), any_order(rhs));
    r.first_mismatch = any_first_mismatch(lhs, rhs);
    r.status = r.first_mismatch ? Status::mismatch : Status::verified;
    return r;
}

void merge_into(VerificationReport &acc, const VerificationReport &part, const std::string &label)
{
    if (acc.ok() && !part.ok()) {
        acc.status = Status::mismatch;
        acc.first_mismatch = part.first_mismatch;
        acc.notes.push_back("first failing component: " + label);
    }
    for (const auto &n : part.notes) {
        acc.notes.push_back(n);
    }
}

} // namespace sptforge
