#include "mirrorcheck/log_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mirrorcheck/errors.hpp"

namespace mirrorcheck {

namespace {

integer binomial(int n, int k)
{
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void check_degree(int degree)
{
    if (degree > max_log_degree) {
        throw precondition_error("log degree " + std::to_string(degree) + " exceeds the bound "
                                 + std::to_string(max_log_degree));
    }
}

} // namespace

log_series::log_series(power_series f)
{
    parts_.push_back(std::move(f));
}

log_series::log_series(std::vector<power_series> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) {
        throw precondition_error("log_series needs at least one part");
    }
    check_degree(log_degree());
    int n = parts_.front().order();
    for (const auto &p : parts_) {
        n = std::min(n, p.order());
    }
    for (auto &p : parts_) {
        if (p.order() != n) {
            p = p.truncated(n);
        }
    }
}

log_series log_series::log_q(int order)
{
    return log_series({power_series(order), power_series::constant(1, order)});
}

log_series log_series::zero(int order, int log_degree)
{
    return log_series(std::vector<power_series>(static_cast<std::size_t>(log_degree) + 1, power_series(order)));
}

power_series log_series::part(int j) const
{
    if (j >= 0 && j <= log_degree()) {
        return parts_[static_cast<std::size_t>(j)];
    }
    return power_series(order());
}

bool log_series::is_log_free() const
{
    return std::all_of(parts_.begin() + std::min<std::ptrdiff_t>(1, std::ssize(parts_)), parts_.end(),
                       [](const power_series &p) { return p.is_zero(); });
}

bool log_series::is_zero() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](const power_series &p) { return p.is_zero(); });
}

log_series log_series::trimmed() const
{
    auto parts = parts_;
    while (parts.size() > 1 && parts.back().is_zero()) {
        parts.pop_back();
    }
    return log_series(std::move(parts));
}

log_series log_series::truncated(int order) const
{
    std::vector<power_series> parts;
    for (const auto &p : parts_) {
        parts.push_back(p.truncated(order));
    }
    return log_series(std::move(parts));
}

log_series &log_series::operator+=(const log_series &rhs)
{
    const int n = std::min(order(), rhs.order());
    const int top = std::max(log_degree(), rhs.log_degree());
    std::vector<power_series> parts;
    for (int j = 0; j <= top; ++j) {
        parts.push_back(part(j).truncated(n) + rhs.part(j).truncated(n));
    }
    parts_ = std::move(parts);
    return *this;
}

log_series &log_series::operator-=(const log_series &rhs)
{
    return *this += rhs * scalar(-1);
}

log_series &log_series::operator*=(const scalar &c)
{
    for (auto &p : parts_) {
        p *= c;
    }
    return *this;
}

log_series operator*(const log_series &a, const power_series &f)
{
    std::vector<power_series> parts;
    for (const auto &p : a.parts_) {
        parts.push_back(p * f);
    }
    return log_series(std::move(parts));
}

log_series operator*(const log_series &a, const log_series &b)
{
    const log_series x = a.trimmed();
    const log_series y = b.trimmed();
    const int top = x.log_degree() + y.log_degree();
    check_degree(top);
    const int n = std::min(x.order(), y.order());
    std::vector<power_series> parts(static_cast<std::size_t>(top) + 1, power_series(n));
    for (int i = 0; i <= x.log_degree(); ++i) {
        for (int j = 0; j <= y.log_degree(); ++j) {
            parts[static_cast<std::size_t>(i + j)] += (x.parts_[static_cast<std::size_t>(i)] * y.parts_[static_cast<std::size_t>(j)]) * scalar(binomial(i + j, i));
        }
    }
    return log_series(std::move(parts));
}

bool operator==(const log_series &a, const log_series &b)
{
    return a.trimmed().parts_ == b.trimmed().parts_;
}

std::string log_series::to_string() const
{
    std::ostringstream os;
    const log_series t = trimmed();
    for (int j = t.log_degree(); j >= 0; --j) {
        os << '(' << t.parts_[static_cast<std::size_t>(j)].to_string() << ')';
        if (j > 0) {
            os << "*L" << j << " + ";
        }
    }
    return os.str();
}

log_series theta_derive(const log_series &f)
{
    std::vector<power_series> parts;
    for (int j = 0; j <= f.log_degree(); ++j) {
        parts.push_back(theta(f.part(j)) + f.part(j + 1));
    }
    return log_series(std::move(parts));
}

} // namespace mirrorcheck
