// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gretl/graph.hpp"
#include "gretl/value.hpp"

using namespace gretl;

TEST_SUITE("value") {

TEST_CASE("structural equality across the union") {
  CHECK(Value::string("a") == Value::string("a"));
  CHECK_FALSE(Value::string("a") == Value::string("b"));
  CHECK_FALSE(Value::string("1") == Value::integer(1));
  CHECK(Value::undefined() == Value::undefined());

  std::vector<Value> items{Value::integer(1), Value::string("x")};
  CHECK(Value::tuple(items) == Value::tuple(items));
}

TEST_CASE("sets are duplicate-free and order-insensitive") {
  SetValue s1;
  CHECK(s1.insert(Value::integer(2)));
  CHECK(s1.insert(Value::integer(1)));
  CHECK_FALSE(s1.insert(Value::integer(2)));
  SetValue s2;
  s2.insert(Value::integer(1));
  s2.insert(Value::integer(2));
  CHECK(Value::set(s1) == Value::set(s2));
  CHECK(s1.size() == 2);
  // iteration is sorted, so {2,1} renders as {1, 2}
  CHECK(Value::set(s1).render() == "{1, 2}");
}

TEST_CASE("map insert collapses equal re-insertions and flags conflicts") {
  MapValue m;
  CHECK(m.insert(Value::string("k"), Value::integer(1)));
  CHECK(m.insert(Value::string("k"), Value::integer(1)));  // same value: fine
  CHECK_FALSE(m.insert(Value::string("k"), Value::integer(2)));
  CHECK(m.size() == 1);
  REQUIRE(m.find(Value::string("k")) != nullptr);
  CHECK(*m.find(Value::string("k")) == Value::integer(1));
}

TEST_CASE("element refs compare by identity") {
  auto s = std::make_shared<Schema>("t");
  auto cls = s->add_vertex_class("C", false);
  Graph g1(s);
  Graph g2(s);
  g1.create_vertex(cls);
  g2.create_vertex(cls);
  CHECK(Value::vertex(&g1, 0) == Value::vertex(&g1, 0));
  CHECK_FALSE(Value::vertex(&g1, 0) == Value::vertex(&g2, 0));
  CHECK_FALSE(Value::vertex(&g1, 0) == Value::edge(&g1, 0));
}

TEST_CASE("rendering") {
  CHECK(Value::undefined().render() == "undefined");
  CHECK(Value::boolean(true).render() == "true");
  CHECK(Value::integer(-3).render() == "-3");
  CHECK(Value::string("hi \"x\"").render() == "\"hi \\\"x\\\"\"");
  std::vector<Value> items{Value::integer(1), Value::integer(2)};
  CHECK(Value::tuple(items).render() == "[1, 2]");
  MapValue m;
  m.insert(Value::string("a"), Value::integer(1));
  CHECK(Value::map(m).render() == "{\"a\" -> 1}");
  CHECK(Value::set(SetValue{}).render() == "{}");
}

}  // TEST_SUITE
