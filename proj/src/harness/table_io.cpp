#include "mckay/harness/table_io.hpp"

#include "mckay/errors.hpp"
#include "mckay/harness/manifest.hpp"

namespace mckay {

namespace {

Json parts_json(const Partition& p) { return p.parts(); }

Partition parts_from(const Json& j, int n) {
  if (!j.is_array()) throw IoError("partition is not an array");
  Partition p;
  try {
    p = Partition(j.get<std::vector<int>>());
  } catch (const ValidationError& e) {
    throw IoError(std::string("bad partition: ") + e.what());
  }
  if (p.size() != n) throw IoError("partition " + p.to_string() + " is not a partition of " + std::to_string(n));
  return p;
}

BigInt big_from(const Json& j) {
  if (!j.is_string()) throw IoError("integer is not a decimal string");
  try {
    return from_decimal(j.get<std::string>());
  } catch (const ValidationError& e) {
    throw IoError(std::string("bad integer: ") + e.what());
  }
}

std::string tag_name(SplitTag t) {
  switch (t) {
    case SplitTag::whole: return "whole";
    case SplitTag::plus: return "plus";
    case SplitTag::minus: return "minus";
  }
  return "?";
}

SplitTag tag_from(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "whole") return SplitTag::whole;
  if (s == "plus") return SplitTag::plus;
  if (s == "minus") return SplitTag::minus;
  throw IoError("unknown split tag '" + s + "'");
}

Json seal(Json doc) {
  doc["content_hash"] = sha256_hex(canonical_dump(doc));
  return doc;
}

// Checks format, version and hash; returns the body.
const Json& unseal(const Json& doc, const std::string& format) {
  if (!doc.is_object()) throw IoError("table document is not an object");
  if (doc.value("format", "") != format) throw IoError("expected format " + format);
  if (doc.value("version", -1) != kTableFormatVersion)
    throw IoError("table format version " + std::to_string(doc.value("version", -1)) + " is not " +
                  std::to_string(kTableFormatVersion));
  Json body = doc;
  body.erase("content_hash");
  if (doc.value("content_hash", "") != sha256_hex(canonical_dump(body))) throw IoError("content hash mismatch");
  return doc;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed table document: ") + e.what());
  }
}

}  // namespace

std::string canonical_dump(const Json& doc) { return doc.dump() + "\n"; }

Json quad_to_json(const QuadValue& x) {
  return {{"a_num", to_decimal(numerator(x.a()))},
          {"a_den", to_decimal(denominator(x.a()))},
          {"b_num", to_decimal(numerator(x.b()))},
          {"b_den", to_decimal(denominator(x.b()))},
          {"D", std::to_string(x.radicand())}};
}

QuadValue quad_from_json(const Json& j) {
  return guarded([&] {
    const BigRational a(big_from(j.at("a_num")), big_from(j.at("a_den")));
    const BigRational b(big_from(j.at("b_num")), big_from(j.at("b_den")));
    try {
      return QuadValue(a, b, to_int64(big_from(j.at("D"))));
    } catch (const std::logic_error& e) {
      throw IoError(std::string("bad quadratic value: ") + e.what());
    }
  });
}

Json sn_table_to_json(const SnTable& t) {
  Json doc{{"format", "mckaylab.sn_table"}, {"version", kTableFormatVersion}, {"n", t.n}};
  Json classes = Json::array(), sizes = Json::array(), chars = Json::array(), values = Json::array();
  for (const auto& c : t.classes) classes.push_back(parts_json(c));
  for (const auto& s : t.class_sizes) sizes.push_back(to_decimal(s));
  for (const auto& c : t.chars) chars.push_back(parts_json(c));
  for (const auto& row : t.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_decimal(v));
    values.push_back(std::move(r));
  }
  doc["classes"] = std::move(classes);
  doc["class_sizes"] = std::move(sizes);
  doc["chars"] = std::move(chars);
  doc["values"] = std::move(values);
  return seal(std::move(doc));
}

SnTable sn_table_from_json(const Json& doc) {
  return guarded([&] {
    unseal(doc, "mckaylab.sn_table");
    SnTable t;
    t.n = doc.at("n").get<int>();
    if (t.n < 1 || t.n > 40) throw IoError("table size out of range");
    for (const auto& c : doc.at("classes")) t.classes.push_back(parts_from(c, t.n));
    for (const auto& s : doc.at("class_sizes")) t.class_sizes.push_back(big_from(s));
    for (const auto& c : doc.at("chars")) t.chars.push_back(parts_from(c, t.n));
    const std::size_t k = t.classes.size();
    if (t.class_sizes.size() != k || t.chars.size() != k || doc.at("values").size() != k)
      throw IoError("table is not square");
    for (std::size_t i = 0; i < k; ++i)
      if (t.class_sizes[i] != class_size(t.classes[i])) throw IoError("class size disagrees with its cycle type");
    for (const auto& row : doc.at("values")) {
      if (row.size() != k) throw IoError("table row has the wrong length");
      std::vector<BigInt> r;
      for (const auto& v : row) r.push_back(big_from(v));
      t.values.push_back(std::move(r));
    }
    return t;
  });
}

Json an_table_to_json(const AnTable& t) {
  Json doc{{"format", "mckaylab.an_table"}, {"version", kTableFormatVersion}, {"n", t.n}};
  Json classes = Json::array(), sizes = Json::array(), chars = Json::array(), values = Json::array();
  for (const auto& c : t.classes) classes.push_back({{"type", parts_json(c.type)}, {"tag", tag_name(c.tag)}});
  for (const auto& s : t.class_sizes) sizes.push_back(to_decimal(s));
  for (const auto& c : t.chars) chars.push_back({{"lambda", parts_json(c.lambda)}, {"tag", tag_name(c.tag)}});
  for (const auto& row : t.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(quad_to_json(v));
    values.push_back(std::move(r));
  }
  doc["classes"] = std::move(classes);
  doc["class_sizes"] = std::move(sizes);
  doc["chars"] = std::move(chars);
  doc["values"] = std::move(values);
  return seal(std::move(doc));
}

AnTable an_table_from_json(const Json& doc) {
  return guarded([&] {
    unseal(doc, "mckaylab.an_table");
    AnTable t;
    t.n = doc.at("n").get<int>();
    if (t.n < 2 || t.n > 40) throw IoError("table size out of range");
    for (const auto& c : doc.at("classes")) {
      AnClass cls{parts_from(c.at("type"), t.n), tag_from(c.at("tag"))};
      if (!is_even_cycle_type(cls.type)) throw IoError("odd cycle type in an A_n table");
      if ((cls.tag != SplitTag::whole) != splits_in_an(cls.type)) throw IoError("split tag disagrees with cycle type");
      t.classes.push_back(std::move(cls));
    }
    for (const auto& s : doc.at("class_sizes")) t.class_sizes.push_back(big_from(s));
    for (const auto& c : doc.at("chars")) t.chars.push_back({parts_from(c.at("lambda"), t.n), tag_from(c.at("tag"))});
    const std::size_t k = t.classes.size();
    if (t.class_sizes.size() != k || t.chars.size() != k || doc.at("values").size() != k)
      throw IoError("table is not square");
    for (std::size_t i = 0; i < k; ++i) {
      const BigInt full = class_size(t.classes[i].type);
      if (t.class_sizes[i] != (t.classes[i].tag == SplitTag::whole ? full : full / 2))
        throw IoError("class size disagrees with its cycle type");
    }
    for (const auto& row : doc.at("values")) {
      if (row.size() != k) throw IoError("table row has the wrong length");
      std::vector<QuadValue> r;
      for (const auto& v : row) r.push_back(quad_from_json(v));
      t.values.push_back(std::move(r));
    }
    return t;
  });
}

}  // namespace mckay
