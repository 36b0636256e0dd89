#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "endoscope/error.hpp"
#include "endoscope/serialize.hpp"

namespace endoscope {

/* The three totally indefinite constructions with Salem eigenvalues. */
struct PaperExample {
    std::string name;
    long t;                     // F = Q(sqrt t)
    long alpha_rational;        // alpha = alpha_rational + alpha_sqrt * sqrt t
    long alpha_sqrt;
    long beta;
    long trace_rational;        // f = (trace_rational - sqrt t + i) / 4
    RationalPoly expected_quartic;
    int g;
};

std::vector<PaperExample> paper_examples();
EndomorphismSpec paper_example_spec(const PaperExample& ex);

struct ExampleCheck {
    std::string example;
    std::string check;
    std::string expected;
    std::string computed;
    bool pass;
};

std::vector<ExampleCheck> run_paper_examples(long precision_bits = default_precision);

/* Exit code of the error kind: 2 for input problems, 3 for precision, 1 otherwise. */
int exit_code(ErrorKind kind) noexcept;
Json error_json(ErrorKind kind, const std::string& detail);

struct RunOptions {
    std::optional<long> precision_bits;
    std::optional<unsigned long> nmax;
    bool table = false;
};

/* Executes a parsed job; throws Error on failure. */
Json run_job(const Json& job, const RunOptions& options);

/* Entry point of the endoscope executable. */
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace endoscope
