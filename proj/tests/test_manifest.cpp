#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace acm;
using namespace acmtest;

namespace {

const std::string kI3 = "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]";
const std::string kPhi3 = "[[\"0\",\"1\",\"0\"],[\"-1\",\"0\",\"0\"],[\"0\",\"0\",\"0\"]]";
const std::string kXYZ = "[\"x\",\"y\",\"z\"]";

std::string flat_text(const std::string& extra = "", const std::string& xi = "2") {
    return manifest_text(kXYZ, kI3, kI3, kPhi3, xi, extra);
}

std::string error_of(const std::string& text) {
    try {
        parse_manifest(text);
    } catch (const ManifestError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Manifest, BundledFixturesLoad) {
    for (const char* f : {"example1", "example2", "example2_gradient", "example3", "flat", "eta_einstein"}) {
        const Manifest mf = manifest(f);
        EXPECT_EQ(mf.spec.name, f);
        EXPECT_EQ(mf.hash.size(), 16u);
        EXPECT_NO_THROW(Manifold{mf.spec}) << f;
    }
}

TEST(Manifest, HashIsOfRawBytes) {
    std::ifstream in(fixture("example3"), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    EXPECT_EQ(manifest("example3").hash, fnv1a_hex(os.str()));
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Manifest, Defaults) {
    const Manifest mf = parse_manifest(flat_text());
    EXPECT_EQ(mf.spec.tol, kDefaultTolerance);
    EXPECT_EQ(mf.spec.sampling.count, 50u);
    ASSERT_EQ(mf.spec.domain.box.size(), 3u);
    EXPECT_EQ(mf.spec.domain.box[1].lo, Rational(-2));
    EXPECT_EQ(mf.spec.domain.box[1].hi, Rational(2));
    EXPECT_FALSE(mf.potential.has_value());
    EXPECT_FALSE(mf.constants.has_value());
}

TEST(Manifest, Overrides) {
    const Manifest mf = parse_manifest(flat_text(", \"seed\": 9, \"samples\": 12, \"tol\": 1e-7"));
    EXPECT_EQ(mf.spec.sampling.seed, 9u);
    EXPECT_EQ(mf.spec.sampling.count, 12u);
    EXPECT_EQ(mf.spec.tol, 1e-7);
}

TEST(Manifest, XiAsCoordinateComponents) {
    const Manifest mf = manifest("example3");
    ManifoldSpec s = mf.spec;
    std::string text = flat_text("", "[\"0\", \"0\", \"1\"]");
    EXPECT_EQ(parse_manifest(text).spec.xi, FrameVector::basis(3, 2));
    // example 3 with xi given as 2x dx - dy + dz
    std::ifstream in(fixture("example3"));
    std::ostringstream os;
    os << in.rdbuf();
    std::string ex3 = os.str();
    ex3.replace(ex3.find("\"xi\": 2"), 7, "\"xi\": [\"2*x\", \"-1\", \"1\"]");
    EXPECT_EQ(parse_manifest(ex3).spec.xi, FrameVector::basis(3, 2));
}

TEST(Manifest, DomainConstraints) {
    const Manifest mf = manifest("example2");
    EXPECT_EQ(mf.spec.domain.box[4].lo, Rational(0));
    ASSERT_EQ(mf.spec.domain.nonvanishing.size(), 1u);
    const Manifold m(mf.spec);
    for (const auto& p : m.sampler().points()) EXPECT_GT(p[4], 0);
}

TEST(Manifest, Potentials) {
    EXPECT_TRUE(manifest("example2").potential->vector.has_value());
    EXPECT_TRUE(manifest("example2_gradient").potential->function.has_value());
    const Manifest mf = manifest("example3");
    ASSERT_TRUE(mf.constants.has_value());
    EXPECT_EQ(mf.constants->lambda_tilde, Rational(-4));
    EXPECT_EQ(mf.constants->mu, Rational(4));
}

TEST(Manifest, MalformedJsonHasLineAndColumn) {
    try {
        parse_manifest("{\n  \"name\": \"x\",\n  \"coordinates\": [\"x\" \"y\"]\n}");
        FAIL();
    } catch (const ManifestError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GT(e.column(), 20u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(Manifest, FieldErrors) {
    EXPECT_NE(error_of("[]").find("JSON object"), std::string::npos);
    EXPECT_NE(error_of("{\"coordinates\": [\"x\",\"y\",\"z\"]}").find("missing field \"frame\""), std::string::npos);
    EXPECT_NE(error_of(manifest_text(kXYZ, "[[\"1\"]]", kI3, kPhi3, "2")).find("frame: expected 3 rows"),
              std::string::npos);
    EXPECT_NE(error_of(flat_text("", "3")).find("xi: frame index out of range"), std::string::npos);
    EXPECT_NE(error_of(flat_text(", \"potential\": {\"vector\": [\"1\",\"0\",\"0\"], \"function\": \"x\"}"))
                  .find("exactly one"),
              std::string::npos);
    EXPECT_NE(error_of(flat_text(", \"domain\": [{\"coordinate\": \"w\", \"interval\": [0, 1]}]"))
                  .find("unknown coordinate"),
              std::string::npos);
    EXPECT_NE(error_of(flat_text(", \"domain\": [{\"coordinate\": \"x\", \"interval\": [1, 1]}]")).find("empty"),
              std::string::npos);
    EXPECT_NE(error_of(flat_text(", \"constants\": {\"lambda_tilde\": \"x\", \"mu\": 0}")).find("constants.lambda_tilde"),
              std::string::npos);
}

TEST(Manifest, ExpressionErrorsCarryPathAndColumn) {
    const std::string bad = manifest_text(kXYZ, "[[\"1\",\"0\",\"0\"],[\"0\",\"1 +\",\"0\"],[\"0\",\"0\",\"1\"]]", kI3,
                                          kPhi3, "2");
    const std::string msg = error_of(bad);
    EXPECT_NE(msg.find("frame[1][1]"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Manifest, MissingFile) { EXPECT_THROW(load_manifest("/nonexistent/manifest.json"), ManifestError); }

TEST(Manifest, ParseRational) {
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
    EXPECT_EQ(parse_rational("-2/(2*2+1)"), Rational(-2, 5));
    EXPECT_THROW(parse_rational("x"), ParseError);
}
