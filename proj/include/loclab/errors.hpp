#pragma once

#include <stdexcept>
#include <string>

namespace loclab {

// Error taxonomy shared by the library and the CLI exit-code mapping.
//   precondition  -> usage / invalid input        (CLI exit 2)
//   generation    -> sampler gave up              (CLI exit 3)
//   verification  -> output failed its verifier   (CLI exit 4)
//   declared_fail -> algorithm's own failure path (CLI exit 5)
//   cap           -> enumeration/budget cap hit   (CLI exit 6)
//   defect        -> internal invariant broken; never caught silently
enum class ErrorKind {
    precondition,
    generation,
    verification,
    declared_fail,
    cap,
    defect,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline void require(bool cond, const std::string& msg, ErrorKind kind = ErrorKind::precondition) {
    if (!cond) throw Error(kind, msg);
}

// Invariant check that must never fire on correct code paths.
inline void check_invariant(bool cond, const std::string& msg) {
    if (!cond) throw Error(ErrorKind::defect, "invariant violated: " + msg);
}

} // namespace loclab
