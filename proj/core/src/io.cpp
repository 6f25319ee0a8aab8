/*
 * Copyright 2026 The Hyperforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hyperforge/io.hpp"

#include <fstream>

namespace hyperforge {

namespace {

int require_int(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ValidationError(std::string("missing or non-integer field \"") + field + "\"");
    return j[field].get<int>();
}

const nlohmann::json& require_array(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ValidationError(std::string("missing or non-array field \"") + field + "\"");
    return j[field];
}

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("JSON parse error in " + path + ": " + e.what());
    }
}

}  // namespace

Json subset_to_json(SubsetMask mask) {
    Json arr = Json::array();
    mask.for_each([&](Element x) { arr.push_back(x); });
    return arr;
}

Json structure_to_json(const Structure& s) {
    Json j;
    j["k"] = s.k();
    j["m"] = s.m();
    j["n"] = s.n();
    Json f = Json::array();
    for (std::size_t i = 0; i < s.f().size(); ++i) f.push_back(subset_to_json(s.f().at_flat(i)));
    j["f"] = std::move(f);
    Json g = Json::array();
    for (std::size_t i = 0; i < s.g().size(); ++i) g.push_back(s.g().at_flat(i));
    j["g"] = std::move(g);
    return j;
}

Structure structure_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("structure file must be a JSON object");
    const int k = require_int(j, "k");
    const int m = require_int(j, "m");
    const int n = require_int(j, "n");
    if (k < 1 || k > kMaxUniverse)
        throw ValidationError("k must lie in [1, " + std::to_string(kMaxUniverse) + "], got " +
                              std::to_string(k));
    if (m < 2 || n < 2) throw ValidationError("arities m and n must be at least 2");

    const auto& f_rows = require_array(j, "f");
    const std::size_t f_expect = table_size(k, m);
    if (f_rows.size() != f_expect)
        throw ValidationError("\"f\" has " + std::to_string(f_rows.size()) +
                              " rows, expected k^m = " + std::to_string(f_expect));
    std::vector<SubsetMask> f_table(f_expect);
    for (std::size_t i = 0; i < f_expect; ++i) {
        const auto& row = f_rows[i];
        if (!row.is_array() || row.empty())
            throw ValidationError("\"f\" row must be a non-empty element array", i,
                                  tuple_decode(i, k, m));
        SubsetMask mask;
        for (const auto& e : row) {
            if (!e.is_number_integer())
                throw ValidationError("\"f\" row contains a non-integer", i, tuple_decode(i, k, m));
            const int x = e.get<int>();
            if (x < 0 || x >= k)
                throw ValidationError("\"f\" row element " + std::to_string(x) +
                                          " outside [0, k)",
                                      i, tuple_decode(i, k, m));
            mask.insert(x);
        }
        f_table[i] = mask;
    }

    const auto& g_rows = require_array(j, "g");
    const std::size_t g_expect = table_size(k, n);
    if (g_rows.size() != g_expect)
        throw ValidationError("\"g\" has " + std::to_string(g_rows.size()) +
                              " entries, expected k^n = " + std::to_string(g_expect));
    std::vector<Element> g_table(g_expect);
    for (std::size_t i = 0; i < g_expect; ++i) {
        if (!g_rows[i].is_number_integer())
            throw ValidationError("\"g\" entry is not an integer", i, tuple_decode(i, k, n));
        const int x = g_rows[i].get<int>();
        if (x < 0 || x >= k)
            throw ValidationError("\"g\" entry " + std::to_string(x) + " outside [0, k)", i,
                                  tuple_decode(i, k, n));
        g_table[i] = x;
    }

    return Structure(HyperOpTable(k, m, std::move(f_table)), OpTable(k, n, std::move(g_table)));
}

Structure load_structure_file(const std::string& path) {
    return structure_from_json(parse_file(path));
}

Json witness_to_json(const Witness& w) {
    Json j;
    j["axiom"] = w.axiom;
    if (!w.positions.empty()) j["positions"] = w.positions;
    j["tuple"] = w.tuple;
    if (!w.outer.empty()) j["outer"] = w.outer;
    j["lhs"] = subset_to_json(w.lhs);
    j["rhs"] = subset_to_json(w.rhs);
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

Json verdict_to_json(const AxiomVerdict& v) {
    Json j;
    j["axiom"] = v.axiom;
    j["holds"] = v.holds;
    if (!v.note.empty()) j["note"] = v.note;
    if (const Witness* w = v.witness()) j["witness"] = witness_to_json(*w);
    if (v.witnesses.size() > 1) {
        Json all = Json::array();
        for (const Witness& w : v.witnesses) all.push_back(witness_to_json(w));
        j["witnesses"] = std::move(all);
    }
    return j;
}

Json ideal_report_to_json(const IdealReport& r) {
    Json j;
    j["subset"] = subset_to_json(r.subset);
    Json kinds;
    kinds["sub_semihyperring"] = r.sub_semihyperring;
    kinds["left"] = r.left;
    kinds["right"] = r.right;
    kinds["two_sided"] = r.two_sided;
    kinds["weak_left"] = r.weak_left;
    j["kinds"] = std::move(kinds);
    j["f_closed"] = r.f_closed;
    return j;
}

Json partition_to_json(const EquivRelation& rel) {
    Json j;
    j["classes"] = rel.class_array();
    j["class_count"] = rel.class_count();
    return j;
}

EquivRelation partition_from_json(const nlohmann::json& j) {
    const nlohmann::json* arr = &j;
    if (j.is_object()) arr = &require_array(j, "classes");
    if (!arr->is_array() || arr->empty())
        throw ValidationError("partition must be a non-empty class-id array");
    std::vector<int> classes;
    classes.reserve(arr->size());
    for (const auto& e : *arr) {
        if (!e.is_number_integer()) throw ValidationError("partition class ids must be integers");
        classes.push_back(e.get<int>());
    }
    return EquivRelation(std::move(classes));
}

Json mapping_to_json(const Mapping& map) {
    Json j;
    j["image"] = map.image;
    return j;
}

Json fuzzy_subset_to_json(const FuzzySubset& mu) {
    Json arr = Json::array();
    for (const Grade& g : mu.grade) arr.push_back(format_grade(g));
    return arr;
}

FuzzySubset fuzzy_subset_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("fuzzy subset must be a non-empty array of \"p/q\" strings");
    std::vector<Grade> grades;
    grades.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string()) throw ValidationError("fuzzy grades must be \"p/q\" strings");
        grades.push_back(parse_grade(e.get<std::string>()));
    }
    return FuzzySubset(std::move(grades));
}

namespace {

Json sparse_grades(int k, int arity, const std::vector<Grade>& grades) {
    Json records = Json::array();
    const std::size_t tuples = grades.size() / static_cast<std::size_t>(k);
    for (std::size_t t = 0; t < tuples; ++t) {
        for (Element z = 0; z < k; ++z) {
            const Grade& g = grades[t * static_cast<std::size_t>(k) + static_cast<std::size_t>(z)];
            if (g == grade_zero()) continue;
            Json rec;
            rec["tuple"] = tuple_decode(t, k, arity);
            rec["out"] = z;
            rec["grade"] = format_grade(g);
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<Grade> dense_grades(const nlohmann::json& records, int k, int arity,
                                const char* field) {
    std::vector<Grade> grades(table_size(k, arity) * static_cast<std::size_t>(k), grade_zero());
    std::vector<bool> seen(grades.size(), false);
    for (const auto& rec : records) {
        if (!rec.is_object() || !rec.contains("tuple") || !rec.contains("out") ||
            !rec.contains("grade"))
            throw ValidationError(std::string(field) +
                                  " records need \"tuple\", \"out\" and \"grade\"");
        const auto& tj = rec["tuple"];
        if (!tj.is_array() || static_cast<int>(tj.size()) != arity)
            throw ValidationError(std::string(field) + " record tuple has wrong length");
        std::vector<Element> tuple;
        for (const auto& e : tj) {
            if (!e.is_number_integer())
                throw ValidationError(std::string(field) + " tuple entries must be integers");
            tuple.push_back(e.get<int>());
        }
        const std::size_t flat = tuple_index(tuple, k);
        const int out = rec["out"].is_number_integer() ? rec["out"].get<int>() : -1;
        if (out < 0 || out >= k)
            throw ValidationError(std::string(field) + " record \"out\" outside [0, k)", flat,
                                  tuple);
        if (!rec["grade"].is_string())
            throw ValidationError(std::string(field) + " record \"grade\" must be a string");
        const std::size_t at = flat * static_cast<std::size_t>(k) + static_cast<std::size_t>(out);
        if (seen[at])
            throw ValidationError(std::string(field) + " has a duplicate (tuple, out) record",
                                  flat, tuple);
        seen[at] = true;
        grades[at] = parse_grade(rec["grade"].get<std::string>());
    }
    return grades;
}

}  // namespace

Json fuzzy_structure_to_json(const FuzzyHyperStructure& fs) {
    Json j;
    j["k"] = fs.k();
    j["m"] = fs.m();
    j["n"] = fs.n();
    j["mu_f"] = sparse_grades(fs.k(), fs.m(), fs.f_grades());
    j["mu_g"] = sparse_grades(fs.k(), fs.n(), fs.g_grades());
    return j;
}

FuzzyHyperStructure fuzzy_structure_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("fuzzy structure file must be a JSON object");
    const int k = require_int(j, "k");
    const int m = require_int(j, "m");
    const int n = require_int(j, "n");
    if (k < 1 || k > kMaxUniverse) throw ValidationError("k out of range");
    if (m < 2 || n < 2) throw ValidationError("arities m and n must be at least 2");
    auto mu_f = dense_grades(require_array(j, "mu_f"), k, m, "mu_f");
    auto mu_g = dense_grades(require_array(j, "mu_g"), k, n, "mu_g");
    return FuzzyHyperStructure(k, m, n, std::move(mu_f), std::move(mu_g));
}

FuzzyHyperStructure load_fuzzy_structure_file(const std::string& path) {
    return fuzzy_structure_from_json(parse_file(path));
}

}  // namespace hyperforge
