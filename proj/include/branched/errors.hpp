#pragma once

#include <stdexcept>
#include <string>

namespace branched {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroAreaError : Error {
    ZeroAreaError() : Error("complex has no faces: average curvature undefined") {}
};

struct EmptySkeletonError : Error {
    EmptySkeletonError() : Error("complex has an empty skeleton") {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& op)
        : Error(op + ": complex is disconnected") {}
};

struct MismatchedComplexesError : Error {
    MismatchedComplexesError() : Error("compose: target of first map differs from source of second") {}
};

struct NotUnfoldableError : Error {
    NotUnfoldableError() : Error("unfold_step: complex is not unfoldable") {}
};

struct NegativeLengthError : Error {
    NegativeLengthError() : Error("systole: negative edge length") {}
};

struct SystoleTooSmallError : Error {
    int vertex;
    SystoleTooSmallError(int v, const std::string& detail)
        : Error("link systole below 2*pi at vertex " + std::to_string(v) + ": " + detail), vertex(v) {}
};

struct InfiniteGirthError : Error {
    int vertex;
    explicit InfiniteGirthError(int v)
        : Error("link of vertex " + std::to_string(v) + " is a forest: girth is infinite"), vertex(v) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

struct InfeasibleError : Error {
    InfeasibleError() : Error("angle optimization: no admissible angle structure in [0, 2*pi]") {}
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& what)
        : Error("parse error at line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                ": " + what),
          line(line_),
          col(col_) {}
};

struct TrivialRelatorError : Error {
    int index;
    explicit TrivialRelatorError(int idx)
        : Error("relator " + std::to_string(idx) + " reduces to the empty word"), index(idx) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error(what) {}
};

}  // namespace branched
