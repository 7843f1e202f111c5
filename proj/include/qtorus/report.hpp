#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qtorus {

// Outcome of a verification sweep: one entry per checked case, in a
// deterministic order (entries are emitted sorted by label), plus free-form
// notes. Rendered as "OK <case>" / "FAIL <case>: lhs=<..> rhs=<..>" lines.
class Report {
public:
    struct Entry {
        bool ok;
        std::string label;
        std::string lhs;
        std::string rhs;
    };

    void add_ok(std::string label);
    void add_fail(std::string label, std::string lhs, std::string rhs);
    void add_note(std::string note);

    // Appends every entry and note of other, keeping this report's order.
    void merge(const Report& other);

    std::size_t checked() const { return entries_.size(); }
    std::size_t failed() const { return failed_; }
    bool all_ok() const { return failed_ == 0; }

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::string>& notes() const { return notes_; }

    // Entries sorted by label, one line each, then NOTE lines.
    std::string to_text() const;

private:
    std::vector<Entry> entries_;
    std::vector<std::string> notes_;
    std::size_t failed_ = 0;
};

} // namespace qtorus
