#pragma once

#include <array>
#include <string>
#include <vector>

#include "strassen/dense.hpp"
#include "strassen/generator.hpp"

namespace strassen {

/// Scheme files: {"field": "rational" | {"prime": p}, "rank": N,
/// "terms": [{"x": [[..]], "y": [[..]], "z": [[..]]}, ...]} with every
/// scalar a string in the canonical text format.
std::string algorithm_to_json(const BilinearAlgorithm& alg);
BilinearAlgorithm algorithm_from_json(const std::string& text);

/// Parameter files: {"field": ..., "v": [[..], [..], [..]],
/// "lambda": [[..], [..], [..]]}.
std::string params_to_json(const Params& p);
Params params_from_json(const std::string& text);

BilinearAlgorithm load_algorithm(const std::string& path);
void save_algorithm(const BilinearAlgorithm& alg, const std::string& path);
Params load_params(const std::string& path);
void save_params(const Params& p, const std::string& path);

/// CSV matrices: one row per line, canonical scalar text (exact) or
/// decimal floats (double path). Must be square.
DenseMatrix<Scalar> matrix_from_csv(const std::string& text, const FieldDesc& field);
DenseMatrix<double> matrix_from_csv_double(const std::string& text);
std::string matrix_to_csv(const DenseMatrix<Scalar>& m);
std::string matrix_to_csv(const DenseMatrix<double>& m);
DenseMatrix<Scalar> load_matrix_csv(const std::string& path, const FieldDesc& field);
DenseMatrix<double> load_matrix_csv_double(const std::string& path);

/// Factor-matrix form: row r of u holds the coefficients of a11,a12,a21,a22
/// in the r-th left linear form (so u[r][2i+j] = x_r[j][i]), v likewise for
/// b, and w[r][2i+j] the weight of product r in c_ij.
struct FactorMatrices {
    std::vector<std::array<Scalar, 4>> u, v, w;
};
FactorMatrices to_factor_matrices(const BilinearAlgorithm& alg);
std::string factor_matrices_to_json(const BilinearAlgorithm& alg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace strassen
