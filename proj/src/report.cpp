#include "forge/report.hpp"

namespace forge {

LawResult& CheckReport::law(const std::string& name) {
    for (auto& l : laws_)
        if (l.name == name) return l;
    laws_.push_back(LawResult{name, {}, {}, false});
    return laws_.back();
}

void CheckReport::add(const std::string& name, std::vector<std::size_t> at, const Vec& residual) {
    LawResult& l = law(name);
    if (is_zero(residual)) return;
    l.witnesses.push_back(Witness{std::move(at), {residual.size()}, residual});
}

void CheckReport::add(const std::string& name, std::vector<std::size_t> at, const Matrix& residual) {
    LawResult& l = law(name);
    if (residual.is_zero()) return;
    l.witnesses.push_back(Witness{std::move(at), {residual.rows(), residual.cols()}, residual.data()});
}

void CheckReport::add(const std::string& name, std::vector<std::size_t> at, const Cube& residual) {
    LawResult& l = law(name);
    if (residual.is_zero()) return;
    l.witnesses.push_back(Witness{std::move(at), {residual.dim(0), residual.dim(1), residual.dim(2)}, residual.data()});
}

void CheckReport::add(const std::string& name, std::vector<std::size_t> at, const Scalar& residual) {
    add(name, std::move(at), Vec{residual});
}

void CheckReport::fail(const std::string& name, const std::string& note) {
    LawResult& l = law(name);
    l.failed_without_witness = true;
    if (!l.note.empty()) l.note += "; ";
    l.note += note;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& l : other.laws_) {
        LawResult copy = l;
        if (!prefix.empty()) copy.name = prefix + "." + l.name;
        LawResult& target = law(copy.name);
        target.witnesses.insert(target.witnesses.end(), copy.witnesses.begin(), copy.witnesses.end());
        if (copy.failed_without_witness) {
            target.failed_without_witness = true;
            target.note += copy.note;
        }
    }
}

bool CheckReport::pass() const {
    for (const auto& l : laws_)
        if (!l.pass()) return false;
    return true;
}

const LawResult* CheckReport::find(const std::string& name) const {
    for (const auto& l : laws_)
        if (l.name == name) return &l;
    return nullptr;
}

bool CheckReport::passes(const std::string& name) const {
    const LawResult* l = find(name);
    return l && l->pass();
}

std::size_t CheckReport::witness_count() const {
    std::size_t n = 0;
    for (const auto& l : laws_) n += l.witnesses.size();
    return n;
}

}  // namespace forge
