#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motionplat {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that a geometric routine cannot handle (collinear vectors, parallel lines, ...).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// A leg target outside the reachable annulus of the planar two-link chain.
class UnreachableError : public Error {
public:
    UnreachableError(const std::string& what, double deficit_mm, int leg = -1)
        : Error(what), deficit_(deficit_mm), leg_(leg) {}

    /// Distance (mm) the target lies outside the reachable set.
    double deficit() const noexcept { return deficit_; }
    /// Leg index in [FL, FR, BL, BR] order, or -1 when raised by a single-leg solve.
    int leg() const noexcept { return leg_; }

private:
    double deficit_;
    int leg_;
};

/// Pose outside the translation/rotation box, a joint limit or the ball-joint pivot cone.
class WorkspaceError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Simulator diverged; carries the tick at which the state became non-finite.
class InstabilityError : public Error {
public:
    InstabilityError(const std::string& what, std::size_t tick) : Error(what), tick_(tick) {}
    std::size_t tick() const noexcept { return tick_; }

private:
    std::size_t tick_;
};

/// Malformed config/log file. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace motionplat
