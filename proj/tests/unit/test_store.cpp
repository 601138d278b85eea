#include <gtest/gtest.h>

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <thread>

#include "lfdb/error.hpp"
#include "lfdb/store/codec.hpp"
#include "lfdb/store/sortable.hpp"
#include "lfdb/store/store.hpp"
#include "synthetic.hpp"
#include "test_support.hpp"

using namespace lfdb;
using namespace lfdb::store;
using testing_support::read_file;
using testing_support::TempDir;
using testing_support::write_file;
using namespace testing_support::synthetic;

namespace {

const char* kNumberFieldLine = "3.1.23.1|1,0,-1,1|-1|23|1||3,2|1,1|23";

}  // namespace

TEST(Sortable, Examples) {
  EXPECT_EQ(encode_sortable_int("23"), "p000223");
  EXPECT_EQ(encode_sortable_int("0"), "p00010");
  EXPECT_EQ(encode_sortable_int("-23"), "n999876");
  EXPECT_LT(encode_sortable_int("9"), encode_sortable_int("10"));
  EXPECT_LT(encode_sortable_int("10"), encode_sortable_int("123"));
  EXPECT_LT(encode_sortable_int("-10"), encode_sortable_int("-9"));
  EXPECT_THROW(encode_sortable_int("12a"), ParseError);
  EXPECT_THROW(encode_sortable_int("007"), ParseError);
  EXPECT_THROW(encode_sortable_int(std::string(10000, '9')), DomainError);
  EXPECT_EQ(decode_sortable_int(encode_sortable_int(std::string(9999, '9'))), std::string(9999, '9'));
  EXPECT_THROW(decode_sortable_int("p000312"), ParseError);
}

TEST(Sortable, OrderMatchesNumericOnRandomValues) {
  std::mt19937_64 rng(100000);
  std::vector<std::pair<mpz_class, std::string>> values;
  values.reserve(100000);
  for (int i = 0; i < 100000; ++i) {
    const auto d = random_decimal(rng, i % 10 == 0 ? 400 : 40);
    values.emplace_back(mpz_class(d), encode_sortable_int(d));
    ASSERT_EQ(decode_sortable_int(values.back().second), d);
  }
  auto by_key = values, by_num = values;
  std::sort(by_key.begin(), by_key.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  std::sort(by_num.begin(), by_num.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < values.size(); ++i) ASSERT_EQ(by_key[i].first, by_num[i].first) << i;
}

TEST(Sortable, OrderAcrossAllMagnitudes) {
  std::mt19937_64 rng(9999);
  std::vector<std::string> decimals;
  for (std::size_t digits = 1; digits <= kMaxSortableDigits; digits += 1 + digits / 8) {
    for (int sign = 0; sign < 2; ++sign) {
      std::string s(1, static_cast<char>('1' + rng() % 9));
      while (s.size() < digits) s.push_back(static_cast<char>('0' + rng() % 10));
      decimals.push_back(sign ? "-" + s : s);
    }
  }
  decimals.push_back(std::string(kMaxSortableDigits, '9'));
  decimals.push_back("-" + std::string(kMaxSortableDigits, '9'));
  decimals.push_back("0");
  for (std::size_t i = 0; i < decimals.size(); ++i) {
    for (std::size_t j = i + 1; j < decimals.size(); j += 1 + (j - i) / 3) {
      const mpz_class a(decimals[i]), b(decimals[j]);
      const auto ka = encode_sortable_int(decimals[i]), kb = encode_sortable_int(decimals[j]);
      ASSERT_EQ(a < b, ka < kb);
      ASSERT_EQ(a == b, ka == kb);
    }
  }
}

TEST(Value, OrderingAndJson) {
  EXPECT_LT(compare(Value(true), Value(std::int64_t{-5})), 0);
  EXPECT_LT(compare(Value(3), Value(3.5)), 0);
  EXPECT_EQ(compare(Value(3), Value(3.0)), 0);
  EXPECT_FALSE(Value(3) == Value(3.0));
  EXPECT_TRUE(loosely_equal(Value(3), Value(3.0)));
  EXPECT_LT(compare(Value(1e300), Value("a")), 0);
  EXPECT_LT(compare(Value("z"), Value(List{})), 0);
  EXPECT_LT(compare(Value(List{Value(1)}), Value(Map{})), 0);
  const Value v(Map{{"a", Value(List{Value(1), Value("x"), Value(2.5), Value(false)})}, {"b", Value(Map{})}});
  EXPECT_EQ(from_json(to_json(v)), v);
  EXPECT_THROW(from_json(nlohmann::json()), ValidationError);
  EXPECT_EQ(display(Value(List{Value("2"), Value("3")})), "2,3");
}

TEST(Collection, QueriesMatchLinearScanOracle) {
  std::mt19937_64 rng(424242);
  std::vector<Synthetic> data;
  Collection c("synthetic", synthetic_indexes());
  for (int i = 0; i < 10000; ++i) {
    data.push_back(make_synthetic(rng, i));
    c.put(data.back().record());
  }
  // Replace and erase a few so the indexes see updates.
  for (int i = 0; i < 500; ++i) {
    const auto k = rng() % data.size();
    data[k] = make_synthetic(rng, static_cast<int>(k));
    c.put(data[k].record());
  }
  for (int i = 0; i < 200; ++i) {
    const auto k = rng() % data.size();
    c.erase(data[k].label);
    data.erase(data.begin() + static_cast<std::ptrdiff_t>(k));
  }
  ASSERT_EQ(c.size(), data.size());

  const std::vector<std::string> sorts = {"", "n", "x", "name", "big"};
  for (int q = 0; q < 1000; ++q) {
    std::vector<OracleFilter> filters;
    for (std::size_t k = rng() % 4; k > 0; --k) filters.push_back(random_filter(rng, data));
    Query query;
    for (const auto& f : filters) query.filters.push_back(f.to_filter());
    const auto sort = sorts[rng() % sorts.size()];
    if (!sort.empty()) query.sort_field = sort;
    query.offset = rng() % 3 == 0 ? rng() % 50 : 0;
    if (rng() % 2) query.limit = rng() % 100;

    std::vector<Synthetic> expected;
    for (const auto& s : data) {
      if (std::all_of(filters.begin(), filters.end(), [&](const OracleFilter& f) { return f.accepts(s); })) {
        expected.push_back(s);
      }
    }
    std::sort(expected.begin(), expected.end(), [&](const Synthetic& a, const Synthetic& b) {
      return oracle_less(a, b, sort.empty() ? "" : sort);
    });
    const auto got = c.query(query);
    ASSERT_EQ(got.total, expected.size()) << "query " << q;
    const std::size_t begin = std::min(query.offset, expected.size());
    std::size_t end = expected.size();
    if (query.limit) end = std::min(end, begin + *query.limit);
    ASSERT_EQ(got.rows.size(), end - begin) << "query " << q;
    for (std::size_t i = begin; i < end; ++i) ASSERT_EQ(got.rows[i - begin].label, expected[i].label) << "query " << q;
  }
}

TEST(Collection, UnsupportedBigRange) {
  Collection c("plain", {});
  c.put({"a", {{"disc", Value("123")}}});
  EXPECT_THROW(c.query({{Filter::range("disc", Value("1"), Value("200"))}, {}, 0, {}}), UnsupportedError);
  Collection big("big", {{"disc", IndexOrdering::SortableBigInt}});
  big.put({"a", {{"disc", Value("123")}}});
  big.put({"b", {{"disc", Value("99")}}});
  const auto r = big.query({{Filter::range("disc", Value(100), Value("200"))}, {}, 0, {}});
  ASSERT_EQ(r.total, 1u);
  EXPECT_EQ(r.rows[0].label, "a");
  EXPECT_EQ(big.query({{Filter::equals("disc", Value(99))}, {}, 0, {}}).total, 1u);
}

TEST(Collection, LabelRules) {
  Collection c("x", {});
  EXPECT_THROW(c.put({"", {}}), ValidationError);
  EXPECT_THROW(c.put({"a|b", {}}), ValidationError);
  EXPECT_THROW(c.put({" a", {}}), ValidationError);
  EXPECT_THROW(c.put({"a\nb", {}}), ValidationError);
  EXPECT_THROW(c.put({"a", {{"label", Value("a")}}}), ValidationError);
}

TEST(Codec, NumberFieldLine) {
  const auto r = parse_line("number_fields", kNumberFieldLine);
  EXPECT_EQ(r.label, "3.1.23.1");
  EXPECT_EQ(r.fields.at("degree"), Value(3));
  EXPECT_EQ(r.fields.at("class_number"), Value(1));
  EXPECT_EQ(r.fields.at("signature"), Value("1,1"));
  EXPECT_EQ(r.fields.at("disc_abs"), Value("23"));
  EXPECT_EQ(format_line("number_fields", r), kNumberFieldLine);
  for (const char* bad : {"3.1.23.1|1,0,-1,2|-1|23|1||3,2|1,1|23", "3.1.23.1|1,0,-1,1|1|23|1||3,2|1,1|23",
                          "3.1.23.1|1,0,-1,1|-1|23|1||3,2|1,1|7", "3.1.23.2x|1,0,-1,1|-1|23|1||3,2|1,1|23",
                          "3.1.29.1|1,0,-1,1|-1|23|1||3,2|1,1|23", "3.1.23.1|1,0,-1,1|-1|23|1||3,2|1,1"}) {
    EXPECT_THROW(parse_line("number_fields", bad), ParseError) << bad;
  }
}

TEST(Codec, OtherGrammars) {
  const std::string ec = "5077a1|0,0,1,-7,6|5077|3|";
  EXPECT_EQ(format_line("elliptic_curves_q", parse_line("elliptic_curves_q", ec)), ec);
  EXPECT_THROW(parse_line("elliptic_curves_q", "5077a1|0,0,1,-7,6|5078|3|"), ParseError);
  EXPECT_THROW(parse_line("elliptic_curves_q", "5077/a/1|0,0,1,-7,6|5077|3|"), ParseError);
  const std::string ch = "4.2|4|1|4|1|2";
  EXPECT_EQ(format_line("characters", parse_line("characters", ch)), ch);
  const std::string z = "Riemann|14.1347251417|-8";
  const auto zr = parse_line("zeros", z);
  EXPECT_EQ(format_line("zeros", zr), z);
  EXPECT_NEAR(zr.fields.at("t").number(), 14.1347251417, 1e-12);
  const auto j = parse_line("notes", R"({"label":"x","text":"hello","n":3})");
  EXPECT_EQ(j.label, "x");
  EXPECT_EQ(j.fields.at("n"), Value(3));
  EXPECT_THROW(parse_line("notes", R"({"text":"no label"})"), ParseError);
}

TEST(Store, PutGetErase) {
  auto s = Store::in_memory();
  s->create_collection("number_fields");
  s->ingest_text("number_fields", std::string(kNumberFieldLine) + "\n");
  const auto r = s->get("number_fields", "3.1.23.1");
  EXPECT_EQ(r.fields.at("class_number"), Value(1));
  EXPECT_EQ(r.fields.at("degree"), Value(3));
  EXPECT_EQ(r.fields.at("signature"), Value("1,1"));
  s->create_collection("misc");
  const Record rec{"k", {{"a", Value(List{Value(1), Value("two")})}, {"m", Value(Map{{"z", Value(true)}})}}};
  s->put("misc", rec);
  EXPECT_EQ(s->get("misc", "k"), rec);
  s->erase("misc", "k");
  EXPECT_THROW(s->get("misc", "k"), NotFoundError);
  EXPECT_THROW(s->erase("misc", "k"), NotFoundError);
  EXPECT_THROW(s->get("nope", "k"), NotFoundError);
  EXPECT_THROW(s->put("number_fields", {"3.1.23.1", {{"degree", Value(3)}}}), ValidationError);
}

TEST(Store, QueryExampleFromSeedData) {
  auto s = Store::in_memory();
  catalog::ensure_collections(*s);
  s->ingest_text("number_fields", read_file(testing_support::seed_file("number_fields.txt")));
  Query q;
  q.filters = {Filter::equals("degree", Value(3)), Filter::range("disc_abs", Value(1), Value(100))};
  const auto r = s->query("number_fields", q);
  EXPECT_TRUE(std::any_of(r.rows.begin(), r.rows.end(), [](const Record& x) { return x.label == "3.1.23.1"; }));
  const auto ramps = s->query("number_fields", {{Filter::contains("ramps", Value("23"))}, {}, 0, {}});
  EXPECT_TRUE(std::any_of(ramps.rows.begin(), ramps.rows.end(), [](const Record& x) { return x.label == "3.1.23.1"; }));
  Query all;
  all.limit = 3;
  const auto page = s->query("number_fields", all);
  EXPECT_EQ(page.total, s->size("number_fields"));
  EXPECT_EQ(page.rows.size(), 3u);
}

TEST(Store, IngestIsAtomic) {
  auto s = Store::in_memory();
  catalog::ensure_collections(*s);
  s->ingest_text("number_fields", std::string(kNumberFieldLine) + "\n");
  const auto before = s->dump_text("number_fields");
  const std::string dup = "2.0.4.1|1,0,1|-1|4|1||2,1|0,1|2\n2.0.4.1|1,0,1|-1|4|1||2,1|0,1|2\n";
  try {
    s->ingest_text("number_fields", dup);
    FAIL() << "duplicate accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(s->dump_text("number_fields"), before);
  const std::string bad = "2.0.4.1|1,0,1|-1|4|1||2,1|0,1|2\n2.0.3.1|1,-1,1|-1|3|1||2,1|0,1|oops\n";
  try {
    s->ingest_text("number_fields", bad);
    FAIL() << "malformed accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(s->dump_text("number_fields"), before);
}

TEST(Store, IngestDumpRoundTripForShippedCollections) {
  auto s = Store::in_memory();
  testing_support::populate(*s, 12, 20.0);
  for (const auto& name : s->collection_names()) {
    const auto dump = s->dump_text(name);
    auto fresh = Store::in_memory();
    fresh->create_collection(name, s->indexes(name));
    EXPECT_EQ(fresh->ingest_text(name, dump), s->size(name));
    EXPECT_EQ(fresh->dump_text(name), dump) << name;
    Query all;
    EXPECT_EQ(fresh->query(name, all).rows, s->query(name, all).rows) << name;
  }
  // The seed files are already in canonical dump form.
  for (const auto& [name, file] : std::vector<std::pair<std::string, std::string>>{
           {"number_fields", "number_fields.txt"}, {"elliptic_curves_q", "elliptic_curves_q.txt"},
           {"notes", "notes.jsonl"}, {"knowls", "knowls.jsonl"}}) {
    EXPECT_EQ(s->dump_text(name), read_file(testing_support::seed_file(file))) << name;
  }
}

TEST(Store, WalReplayAndCompaction) {
  TempDir dir;
  {
    auto s = Store::open(dir.path(), true);
    s->create_collection("things", {{"n", IndexOrdering::Plain}});
    for (int i = 0; i < 50; ++i) s->put("things", {"t" + std::to_string(i), {{"n", Value(i)}}});
    s->erase("things", "t7");
    EXPECT_GT(std::filesystem::file_size(dir / "things.wal"), 0u);
  }
  {
    auto s = Store::open(dir.path(), false);
    EXPECT_EQ(s->size("things"), 49u);
    EXPECT_FALSE(s->find("things", "t7"));
    EXPECT_EQ(s->query("things", {{Filter::range("n", Value(10), Value(19))}, {}, 0, {}}).total, 10u);
    s->compact();
    EXPECT_EQ(std::filesystem::file_size(dir / "things.wal"), 0u);
    EXPECT_EQ(read_file(dir / "things.jsonl"), s->dump_text("things"));
  }
  auto s = Store::open(dir.path(), false);
  EXPECT_EQ(s->size("things"), 49u);
}

TEST(Store, TornWalTailIsIgnored) {
  TempDir dir;
  {
    auto s = Store::open(dir.path(), true);
    s->create_collection("things");
    s->put("things", {"a", {{"v", Value(1)}}});
  }
  {
    std::ofstream out(dir / "things.wal", std::ios::app);
    out << R"({"ops":[{"put":{"label":"b","fields":{"v":)";
  }
  auto s = Store::open(dir.path(), false);
  EXPECT_EQ(s->size("things"), 1u);
  EXPECT_TRUE(s->find("things", "a"));
}

TEST(Store, GenerationAdvances) {
  TempDir dir;
  auto s = Store::open(dir.path(), true);
  s->create_collection("things");
  const auto g0 = Store::read_generation(dir.path());
  s->put("things", {"a", {}});
  EXPECT_GT(Store::read_generation(dir.path()), g0);
  EXPECT_EQ(Store::read_generation(dir.path()), s->generation());
  EXPECT_THROW(Store::open(dir / "missing", false), NotFoundError);
}

TEST(Store, ConcurrentUpdatesAreSerialized) {
  auto s = Store::in_memory();
  s->create_collection("c");
  s->put("c", {"counter", {{"v", Value(0)}}});
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 200; ++i) {
        s->update("c", [](const Collection& c, WriteBatch& b) {
          const auto v = c.find("counter")->fields.at("v").integer();
          b.put({"counter", {{"v", Value(v + 1)}}});
        });
        Query all;
        EXPECT_EQ(s->query("c", all).total, 1u);
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(s->get("c", "counter").fields.at("v").integer(), 1600);
}

TEST(DirectoryLock, ExclusiveAndDetectable) {
  TempDir dir;
  EXPECT_FALSE(DirectoryLock::is_held(dir.path()));
  {
    DirectoryLock lock(dir.path());
    EXPECT_TRUE(DirectoryLock::is_held(dir.path()));
    EXPECT_THROW(DirectoryLock second(dir.path()), BusyError);
  }
  EXPECT_FALSE(DirectoryLock::is_held(dir.path()));
}
