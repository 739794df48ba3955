#include <doctest.h>

#include "strassen/demo.hpp"
#include "strassen/io.hpp"
#include "strassen/sampling.hpp"
#include "strassen/verify.hpp"

using namespace strassen;

namespace {

const FieldDesc kQ = FieldDesc::rationals();

BilinearAlgorithm canonical_alg() { return build_algorithm(strassen_params(kQ)); }

bool same_algorithm(const BilinearAlgorithm& a, const BilinearAlgorithm& b) {
    if (a.field() != b.field() || a.rank() != b.rank()) return false;
    for (std::size_t r = 0; r < a.rank(); ++r)
        if (a.term(r).x != b.term(r).x || a.term(r).y != b.term(r).y || a.term(r).z != b.term(r).z)
            return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("scheme serialization round-trips bit-exactly") {
    BilinearAlgorithm alg = canonical_alg();
    std::string text = algorithm_to_json(alg);
    BilinearAlgorithm back = algorithm_from_json(text);
    CHECK(same_algorithm(alg, back));
    CHECK(algorithm_to_json(back) == text);  // parse then format reproduces the bytes

    RandomSource rs(101);
    BilinearAlgorithm rational_alg = build_algorithm(random_valid_params(rs, kQ));
    CHECK(algorithm_to_json(algorithm_from_json(algorithm_to_json(rational_alg))) ==
          algorithm_to_json(rational_alg));
}

TEST_CASE("parameter serialization round-trips") {
    Params p = strassen_params(kQ);
    std::string text = params_to_json(p);
    Params back = params_from_json(text);
    CHECK(params_to_json(back) == text);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.v[i] == p.v[i]);
        CHECK(back.l[i] == p.l[i]);
    }
}

TEST_CASE("prime-field files carry their modulus") {
    FieldDesc f5 = FieldDesc::prime(5);
    BilinearAlgorithm alg = build_algorithm(strassen_params(f5));
    BilinearAlgorithm back = algorithm_from_json(algorithm_to_json(alg));
    CHECK(back.field() == f5);
    CHECK(verify_bilinear(back).passed);
    CHECK(algorithm_to_json(alg).find("\"prime\": 5") != std::string::npos);
}

TEST_CASE("schema violations raise ParseError") {
    std::string good = algorithm_to_json(canonical_alg());

    // rank inconsistent with the term count
    std::string bad_rank = good;
    bad_rank.replace(bad_rank.find("\"rank\": 7"), 9, "\"rank\": 6");
    CHECK_THROWS_AS(algorithm_from_json(bad_rank), ParseError);

    CHECK_THROWS_AS(algorithm_from_json("not json at all"), ParseError);
    CHECK_THROWS_AS(algorithm_from_json("{\"field\":\"rational\",\"rank\":0,\"terms\":\"x\"}"), ParseError);
    CHECK_THROWS_AS(algorithm_from_json("{\"field\":\"octonions\",\"rank\":0,\"terms\":[]}"), ParseError);
    CHECK_THROWS_AS(params_from_json("{\"field\":\"rational\",\"v\":[],\"lambda\":[]}"), ParseError);

    // scalars must be strings, never JSON numbers
    CHECK_THROWS_AS(algorithm_from_json(
                        "{\"field\":\"rational\",\"rank\":1,\"terms\":[{\"x\":[[1,0],[0,1]],"
                        "\"y\":[[\"1\",\"0\"],[\"0\",\"1\"]],\"z\":[[\"1\",\"0\"],[\"0\",\"1\"]]}]}"),
                    ParseError);
}

TEST_CASE("matrix CSV round-trip and errors") {
    RandomSource rs(103);
    DenseMatrix<Scalar> m(4, Scalar::zero(kQ));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = random_scalar(rs, kQ, 9, 4);

    std::string csv = matrix_to_csv(m);
    DenseMatrix<Scalar> back = matrix_from_csv(csv, kQ);
    CHECK(back == m);
    CHECK(matrix_to_csv(back) == csv);

    CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n", kQ), ParseError);
    CHECK_THROWS_AS(matrix_from_csv("", kQ), ParseError);
    CHECK_THROWS_AS(matrix_from_csv("1,x\n3,4\n", kQ), ParseError);

    DenseMatrix<double> d = matrix_from_csv_double("1.5,2\n-0.25,1e3\n");
    CHECK(d.at(0, 0) == 1.5);
    CHECK(d.at(1, 1) == 1000.0);
    CHECK_THROWS_AS(matrix_from_csv_double("1,oops\n2,3\n"), ParseError);

    // prime-field entries reduce on the way in and stay reduced
    FieldDesc f7 = FieldDesc::prime(7);
    DenseMatrix<Scalar> p = matrix_from_csv("9,-1\n3/5,0\n", f7);
    CHECK(p.at(0, 0) == Scalar::from_int(2, f7));
    CHECK(p.at(0, 1) == Scalar::from_int(6, f7));
    CHECK(p.at(1, 0) == Scalar::from_int(2, f7));  // 3 * inv(5) = 3 * 3 = 2 mod 7
    CHECK(matrix_to_csv(p) == "2,6\n2,0\n");
}

TEST_CASE("factor matrices follow the documented flattening") {
    BilinearAlgorithm alg = canonical_alg();
    FactorMatrices f = to_factor_matrices(alg);
    REQUIRE(f.u.size() == 7);

    // term 1 is tr(a c_12) tr(b c_23) c_31: the a-form picks a11 only
    CHECK(f.u[1][0] == Scalar::one(kQ));
    CHECK(f.u[1][1] == Scalar::zero(kQ));
    CHECK(f.u[1][2] == Scalar::zero(kQ));
    CHECK(f.u[1][3] == Scalar::zero(kQ));
    // and its output matrix c_31 contributes to c12 and c22
    CHECK(f.w[1][1] == Scalar::one(kQ));
    CHECK(f.w[1][3] == Scalar::one(kQ));
    CHECK(f.w[1][0] == Scalar::zero(kQ));

    CHECK(brent_check(f.u, f.v, f.w));

    std::string json = factor_matrices_to_json(alg);
    CHECK(json.find("\"u\"") != std::string::npos);
    CHECK(json.find("\"rank\": 7") != std::string::npos);
}

TEST_CASE("demo text reproduces the classical tables") {
    std::string text = demo_text();
    CHECK(text.find("c_{2,1} = [[0,0],[0,1]]") != std::string::npos);
    CHECK(text.find("c_{2,3} = [[0,0],[1,-1]]") != std::string::npos);
    CHECK(text.find("(ab)^{1,1} = I + IV - V + VII") != std::string::npos);
    CHECK(text.find("(ab)^{1,2} = III + V") != std::string::npos);
    CHECK(text.find("(ab)^{2,1} = II + IV") != std::string::npos);
    CHECK(text.find("(ab)^{2,2} = I - II + III + VI") != std::string::npos);
    CHECK(demo_text() == text);  // deterministic
}

TEST_SUITE_END();
