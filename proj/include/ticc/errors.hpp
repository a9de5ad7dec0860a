#ifndef TICC_ERRORS_HPP
#define TICC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ticc {

/// Error classes surfaced by the library. Each class maps to a distinct
/// process exit code in the CLI (see exit_code()).
enum class errc {
    invalid_parameters,
    parse_error,
    resource_limit,
    budget_exceeded,
    not_bracketed,
    insufficient_points,
    inconsistent_boundary,
    invalid_id,
    io_error,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

    int exit_code() const noexcept {
        switch (code_) {
            case errc::invalid_parameters:    return 2;
            case errc::parse_error:           return 3;
            case errc::resource_limit:        return 4;
            case errc::budget_exceeded:       return 5;
            case errc::not_bracketed:         return 6;
            case errc::insufficient_points:   return 7;
            case errc::inconsistent_boundary: return 8;
            case errc::invalid_id:            return 9;
            case errc::io_error:              return 10;
        }
        return 1;
    }

  private:
    errc code_;
};

} // namespace ticc

#endif
