#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vexspace {

/// Insertion-ordered JSON value with fixed float formatting (17 significant
/// digits) so reruns produce byte-identical artifacts. Non-finite numbers
/// are emitted as quoted strings.
class Json {
  public:
    static Json object();
    static Json array();
    static Json num(double v);
    static Json integer(long long v);
    static Json str(std::string s);
    static Json boolean(bool b);

    Json& set(const std::string& key, Json v); // object
    Json& push(Json v);                        // array

    std::string dump(int indent = 2) const;

  private:
    enum class Type { object, array, number, integer, string, boolean };
    Type type_ = Type::object;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<std::pair<std::string, Json>> members_;
    std::vector<Json> items_;
    void write(std::string& out, int indent, int depth) const;
};

std::string format_double(double v); // %.17g, locale-independent

struct CheckItem {
    std::string claim;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = true;
};

struct Report {
    std::string name;
    std::vector<CheckItem> items;
    bool pass = true;
    bool skipped = false; // precondition failed; items carry the diagnostic
    std::map<std::string, double> metrics;
    std::vector<std::string> notes;

    void add(const std::string& claim, double lhs, double rhs, double margin, bool ok) {
        items.push_back({claim, lhs, rhs, margin, ok});
        pass = pass && ok;
    }
    Json to_json() const;
};

/// CSV rows of doubles with a header; %.17g formatting.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace vexspace
