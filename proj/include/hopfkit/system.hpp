#pragma once

#include "hopfkit/hopf.hpp"
#include "hopfkit/vector_fields.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfkit {

/// Polynomial text in the given variables: rational coefficients, explicit
/// "*", "^" powers (negative powers allowed), parentheses, division by
/// constants. Example: "-1/4*X - X^3/2 + A*C".
RationalPoly parse_poly(const std::string &text, const std::vector<std::string> &names);

/// A periodically forced polynomial system
///   dx/dt = sum_letters cos(k_letter w t) f_letter(x).
struct SystemSpec {
    struct Generator {
        char letter;
        int harmonic;
        PolyVectorField field;
        /// Rotation rate under the unperturbed flow, used by splitting.
        int frequency = 0;
    };

    std::string name;
    VariableSet vars;
    std::vector<Generator> generators;
    std::map<std::string, Rational> parameter_values;
    std::vector<Rational> initial;
    int order = 3;

    std::string letters() const;
    Alphabet alphabet() const { return Alphabet(letters()); }
    std::vector<PolyVectorField> letter_fields() const;
    const Generator &generator(char letter) const;
};

/// A generator without "field" gets the zero field.
SystemSpec parse_system(const std::string &json_text);
SystemSpec load_system(const std::string &path);

/// {"generators": [{"name": "G1", "degree": 1}, ...],
///  "brackets": [{"left": "G1", "right": "G2", "value": {"G3": "1"}}, ...]}
/// Each bracket is recorded with its antisymmetric partner.
GradedLieAlgebra parse_lie_algebra(const std::string &json_text);

std::string read_file(const std::string &path);

} // namespace hopfkit
