#pragma once

#include <string>

namespace sc {

/// Outcome of an identity check against truncated data. Truncation is never
/// proof of equality, so the result is three-valued: the comparison either
/// examined coefficients and found them all zero (holds, up to the reported
/// orders), found a nonzero one (fails, with its location), or had nothing
/// known to compare (insufficient).
struct Verdict {
    enum class Status { holds, fails, insufficient };

    Status status = Status::insufficient;
    int z_order = 0;  ///< z-order up to which the check ran
    int q_order = 0;  ///< q-order up to which the check ran
    std::string detail;

    bool ok() const { return status == Status::holds; }

    static Verdict holds(int zo, int qo) { return {Status::holds, zo, qo, ""}; }
    static Verdict fails(int zo, int qo, std::string d) {
        return {Status::fails, zo, qo, std::move(d)};
    }
    static Verdict insufficient(std::string d) {
        return {Status::insufficient, 0, 0, std::move(d)};
    }
    static Verdict insufficient(int zo, int qo, std::string d) {
        return {Status::insufficient, zo, qo, std::move(d)};
    }

    std::string str() const {
        switch (status) {
            case Status::holds:
                return "holds to (z^" + std::to_string(z_order) + ", q^" + std::to_string(q_order) + ")";
            case Status::fails:
                return "FAILS: " + detail;
            default:
                return "insufficient accuracy" + (detail.empty() ? "" : ": " + detail);
        }
    }
};

}  // namespace sc
