#include "tachyon/serialization.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace tachyon;
using tachyon::testing::Gen;

TEST(Serialization, EventRoundTripIsExact) {
    Gen g(81);
    for (int i = 0; i < 200; ++i) {
        const auto e = g.event(1e6);
        const auto back = event_from_json(json::parse(to_json(e).dump()));
        EXPECT_EQ(back.t, e.t);
        EXPECT_EQ(back.x, e.x);
        EXPECT_EQ(back.y, e.y);
        EXPECT_EQ(back.z, e.z);
    }
}

TEST(Serialization, EventMissingKeysDefaultToZero) {
    const auto e = event_from_json(json::parse(R"({"t": 2, "x": -1})"));
    EXPECT_EQ(e.t, 2.0);
    EXPECT_EQ(e.x, -1.0);
    EXPECT_EQ(e.y, 0.0);
    EXPECT_EQ(e.z, 0.0);
    EXPECT_THROW(event_from_json(json::array()), std::invalid_argument);
}

TEST(Serialization, StateDispatch) {
    const auto t = state_from_json(json::parse(R"({"mu": 1.5, "w": [2, 0, 0], "s": [1, 0, 0], "pseudo": true})"));
    ASSERT_TRUE(std::holds_alternative<TachyonState>(t));
    const auto& ts = std::get<TachyonState>(t);
    EXPECT_EQ(ts.mu, 1.5);
    EXPECT_TRUE(ts.pseudo);
    EXPECT_FALSE(ts.infinite_speed);
    EXPECT_EQ(to_json(ts), json::parse(R"({"mu": 1.5, "w": [2.0, 0.0, 0.0], "s": [1.0, 0.0, 0.0], "pseudo": true})"));

    const auto m = state_from_json(json::parse(R"({"m": 1, "v": [0.1, 0.2, 0.3]})"));
    ASSERT_TRUE(std::holds_alternative<MassiveState>(m));
    EXPECT_EQ(std::get<MassiveState>(m).v, Vec3(0.1, 0.2, 0.3));

    EXPECT_THROW(state_from_json(json::parse(R"({"v": [0, 0, 0]})")), std::invalid_argument);
    EXPECT_THROW(state_from_json(json::parse(R"({"m": 1, "v": [0, 0]})")), std::invalid_argument);
}

TEST(Serialization, InfiniteTachyonNormalizesDirection) {
    const auto t = tachyon_from_json(json::parse(R"({"mu": 1, "w": [0, 3, 0], "s": [0, 1, 0], "infinite": true})"));
    EXPECT_TRUE(t.infinite_speed);
    EXPECT_NEAR((t.w - Vec3(0, 1, 0)).norm(), 0.0, 1e-15);
    EXPECT_TRUE(to_json(t).at("infinite").get<bool>());
}

TEST(Serialization, EnsembleRoundTrip) {
    const MirrorGeometry mirror;
    const auto ens = mirror(2.0);
    const auto back = ensemble_from_json(json::parse(to_json(ens).dump()));
    ASSERT_EQ(back.paths.size(), ens.paths.size());
    EXPECT_EQ(phases(back), phases(ens));
    EXPECT_EQ(to_json(back), to_json(ens));
}

TEST(Serialization, EnsembleRejectsBrokenPaths) {
    const auto j = json::parse(R"({
        "source": {"t": 0}, "sink": {"t": 2},
        "paths": [{"segments": [{"start": {"t": 0}, "end": {"t": 1}, "E": 1, "p": [0, 0, 0]}]}]})");
    EXPECT_THROW(ensemble_from_json(j), std::invalid_argument);
}
