#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vblind {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller broke an operation's contract (bad arguments, inconsistent inputs).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A point or parameter lies outside the set where the map is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

// A numerical routine failed (non-finite value, no convergence).
class NumericError : public Error {
public:
    using Error::Error;
};

// A "grow until the predicate holds" search hit its cap.
class SearchError : public Error {
public:
    SearchError(std::string stage, std::string detail, double alpha = 0.0, long piece = -1,
                int deepest_stage = -1)
        : Error(stage + ": " + detail),
          stage_(std::move(stage)),
          alpha_(alpha),
          piece_(piece),
          deepest_(deepest_stage) {}

    const std::string& stage() const noexcept { return stage_; }
    double alpha() const noexcept { return alpha_; }
    long piece() const noexcept { return piece_; }
    int deepest_stage() const noexcept { return deepest_; }

private:
    std::string stage_;
    double alpha_;
    long piece_;
    int deepest_;
};

// The cover and small direction sets could not be separated.
class SeparationError : public Error {
public:
    SeparationError(const std::string& what, double cover_angle, double small_angle)
        : Error(what), cover_(cover_angle), small_(small_angle) {}

    double cover_angle() const noexcept { return cover_; }
    double small_angle() const noexcept { return small_; }

private:
    double cover_;
    double small_;
};

// Scene or JSON input rejected; path names the offending field.
class SceneError : public Error {
public:
    SceneError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace vblind
