#include "qtorus/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qtorus {

void Report::add_ok(std::string label) {
    entries_.push_back(Entry{true, std::move(label), {}, {}});
}

void Report::add_fail(std::string label, std::string lhs, std::string rhs) {
    entries_.push_back(Entry{false, std::move(label), std::move(lhs), std::move(rhs)});
    ++failed_;
}

void Report::add_note(std::string note) { notes_.push_back(std::move(note)); }

void Report::merge(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
    failed_ += other.failed_;
}

std::string Report::to_text() const {
    std::vector<const Entry*> order;
    order.reserve(entries_.size());
    for (const Entry& e : entries_) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(),
                     [](const Entry* x, const Entry* y) { return x->label < y->label; });
    std::ostringstream out;
    for (const Entry* e : order) {
        if (e->ok) out << "OK " << e->label << "\n";
        else out << "FAIL " << e->label << ": lhs=" << e->lhs << " rhs=" << e->rhs << "\n";
    }
    for (const std::string& note : notes_) out << "NOTE " << note << "\n";
    return out.str();
}

} // namespace qtorus
