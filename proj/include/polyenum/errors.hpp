#pragma once

#include <stdexcept>
#include <string>

namespace polyenum {

// Series arithmetic violations.
struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};
struct NonSquareConstant : std::domain_error {
    explicit NonSquareConstant(const std::string& what) : std::domain_error(what) {}
};
struct NotSDominated : std::domain_error {
    explicit NotSDominated(const std::string& what) : std::domain_error(what) {}
};
struct OutOfTruncation : std::out_of_range {
    explicit OutOfTruncation(const std::string& what) : std::out_of_range(what) {}
};

// Catalog / input validation.
struct UnknownFormula : std::invalid_argument {
    explicit UnknownFormula(const std::string& what) : std::invalid_argument(what) {}
};
struct UnknownClass : std::invalid_argument {
    explicit UnknownClass(const std::string& what) : std::invalid_argument(what) {}
};
struct WrongLattice : std::invalid_argument {
    explicit WrongLattice(const std::string& what) : std::invalid_argument(what) {}
};

// Functional-equation solving.
struct NonContractive : std::domain_error {
    explicit NonContractive(const std::string& what) : std::domain_error(what) {}
};
struct SingularLinearSystem : std::domain_error {
    explicit SingularLinearSystem(const std::string& what) : std::domain_error(what) {}
};
struct DegenerateSeed : std::domain_error {
    explicit DegenerateSeed(const std::string& what) : std::domain_error(what) {}
};

// Strip transfer module.
struct SingularSystem : std::domain_error {
    explicit SingularSystem(const std::string& what) : std::domain_error(what) {}
};
struct NoPositiveRoot : std::domain_error {
    explicit NoPositiveRoot(const std::string& what) : std::domain_error(what) {}
};

}  // namespace polyenum
