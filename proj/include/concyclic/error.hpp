#pragma once

#include <stdexcept>
#include <string>

namespace concyclic {

enum class errc {
    not_concyclic,
    collinear_input,
    duplicate_point,
    index_out_of_range,
    equal_indices,
    kind_mismatch,
    length_mismatch,
    crossing_ears,
    same_apex,
    precondition_violated,
    too_large,
    too_small,
    limit_is_zero,
    parse_error,
};

const char* errc_name(errc code);

/// Library-wide exception type; carries a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace concyclic
