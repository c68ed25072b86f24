#include <doctest.h>

#include "confhom/predict.hpp"
#include "confhom/serialize.hpp"
#include "confhom/surface.hpp"

using namespace confhom;

TEST_CASE("betti record bytes for the hand-verified instance") {
    const BettiTable table = betti(make_surface(1, 1), 2);
    CHECK(betti_record(table).dump() ==
          R"({"genus":1,"boundaries":1,"points":2,"betti_open":[1,3,3],)"
          R"("betti_compactified":{"2":3,"3":3,"4":1},"cells_by_dim":{"2":3,"3":3,"4":1},)"
          R"("euler":1})");
}

TEST_CASE("record round trip") {
    for (int g = 0; g <= 2; ++g)
        for (int m = 0; m <= 4; ++m) {
            const BettiTable table = betti(make_surface(g, 1), m);
            const BettiTable back = betti_table_from_record(betti_record(table));
            CHECK(back.surface == table.surface);
            CHECK(back.weight == table.weight);
            CHECK(back.open == table.open);
            CHECK(back.compactified == table.compactified);
            CHECK(back.cells_by_dim == table.cells_by_dim);
            CHECK(back.euler == table.euler);
        }
}

TEST_CASE("predicted record carries its source tag") {
    const SurfaceSpec s = make_surface(1, 1);
    const auto record = predicted_record(s, 2, predicted_open(s, 2));
    CHECK(record.at("source") == "predicted");
    CHECK(record.at("betti_open") == std::vector<std::size_t>{1, 3, 3});
    CHECK(record.at("euler") == 1);
    // duality forces the compactified side
    CHECK(record.at("betti_compactified").at("4") == 1);
}

TEST_CASE("csv rows") {
    const BettiTable table = betti(make_surface(0, 1), 2);
    std::string betti_rows;
    append_betti_csv(betti_rows, table);
    CHECK(betti_rows == "0,1,2,0,1\n0,1,2,1,1\n0,1,2,2,0\n");

    std::string table_rows;
    append_table_csv(table_rows, table, predicted_open(table.surface, 2));
    CHECK(table_rows == "0,1,2,0,1,1,true\n0,1,2,1,1,1,true\n0,1,2,2,0,0,true\n");
}

TEST_CASE("text block follows the bigrading convention") {
    const BettiTable table = betti(make_surface(1, 1), 1);
    CHECK(betti_text(table) ==
          "g=1 n=1 m=1 cells=3 euler=-1\n"
          "degree weight betti\n"
          "0 1 1\n"
          "1 1 2\n");
}

TEST_CASE("cells record") {
    const auto record = cells_record(enumerate_cells(make_surface(1, 1), 2));
    REQUIRE(record.size() == 7);
    CHECK(record[0].at("l") == 0);
    CHECK(record[0].at("s") == std::vector<int>{0, 2});
    CHECK(record[6].at("x") == std::vector<int>{1, 1});
}

TEST_CASE("compare record") {
    const BettiTable table = betti(make_surface(1, 1), 2);
    const auto record = compare_record(table, predicted_open(table.surface, 2));
    CHECK(record.at("match") == true);
    CHECK(record.at("predicted_open") == std::vector<std::size_t>{1, 3, 3});
}
