#include "spincode/json_io.hpp"

#include "spincode/multiqubit_kl.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spincode;

TEST_CASE("code JSON carries the documented schema") {
    const MultiqubitCode code = code1(4);
    const Json j = code_to_json(code);
    CHECK(j.at("n") == 11);
    CHECK(j.at("K") == 2);
    CHECK(j.at("d") == 3);
    CHECK(j.at("rep").at("b") == 4);
    CHECK(j.at("rep").at("a") == 3);
    CHECK(j.at("group").at("degree") == 8);
    CHECK(j.at("group").at("faithful") == true);
    CHECK(j.at("group").at("exotic") == false);
    CHECK(j.at("group").at("generators")[2] == "Ph(pi/4)^5");
    CHECK(j.at("labeling") == "swapped");
    const auto& word0 = j.at("codewords")[0];
    CHECK(word0[0].at("weight") == 0);
    CHECK(word0[0].at("exact") == "sqrt(5)/4");
    CHECK(word0[1].at("weight") == 8);
    CHECK(word0[1].at("exact") == "sqrt(11)/4");
}

TEST_CASE("amplitudes survive the string round trip bit-for-bit") {
    const MultiqubitCode code = code1(5);
    const Json j = code_to_json(code);
    const MultiqubitCode back = code_from_json(j);
    CHECK(back.n == code.n);
    CHECK(back.d == code.d);
    CHECK(back.labeling == code.labeling);
    REQUIRE(back.amp0.size() == code.amp0.size());
    for (const auto& [w, a] : code.amp0)
        REQUIRE(back.amp0.at(w) == a);
    for (const auto& [w, a] : code.amp1)
        REQUIRE(back.amp1.at(w) == a);
    REQUIRE(back.rep);
    CHECK(back.rep->b == 5);
    CHECK(back.rep->a == 4);
}

TEST_CASE("serialization is deterministic") {
    const std::string a = code_to_json(code1(6)).dump(2);
    const std::string b = code_to_json(code1(6)).dump(2);
    CHECK(a == b);
}

TEST_CASE("reloaded codes verify in all modes") {
    const MultiqubitCode code = code_from_json(code_to_json(code1(4)));
    CHECK(kl_check_full(unbootstrap(code), 3, 1e-12).pass);
    CHECK(multiqubit_kl_check(code, 3, KLMode::Dense, 1e-10).pass);
    CHECK(multiqubit_kl_check(code, 3, KLMode::Symmetric, 1e-10).pass);
    CHECK(certify_group(code, 1e-12).ok);
}

TEST_CASE("KL report JSON schema") {
    const KLReport report = kl_check_full(unbootstrap(code1(4)), 3, 1e-12);
    const Json j = kl_report_to_json(report);
    CHECK(j.at("pass") == true);
    CHECK(j.at("tolerance") == 1e-12);
    CHECK(j.at("max_residual").get<double>() < 1e-12);
    const auto& cond = j.at("conditions")[0];
    CHECK(cond.contains("k"));
    CHECK(cond.contains("q"));
    CHECK(cond.contains("kind"));
    CHECK(cond.contains("residual"));

    const KLReport dense = multiqubit_kl_check(code1(4), 3, KLMode::Dense, 1e-10);
    const Json jd = kl_report_to_json(dense);
    CHECK(jd.at("conditions")[0].contains("label"));
}

TEST_CASE("malformed code files are rejected") {
    Json j;
    j["n"] = 5;
    j["codewords"] = Json::array({Json::array()});
    CHECK_THROWS_AS(code_from_json(j), std::invalid_argument);
}
