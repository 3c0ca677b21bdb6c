// SPDX-License-Identifier: Apache-2.0
#include "ssp/io.hpp"

#include <fstream>
#include <sstream>

#include "ssp/errors.hpp"

namespace ssp {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("cannot write " + path);
}

std::vector<Word> load_words(const std::string& path) {
    const std::string content = read_file(path);
    std::vector<Word> words;
    Word cur;
    size_t line = 1;
    auto flush_line = [&]() {
        if (cur.empty())
            throw ParseError(path + ":" + std::to_string(line) + ": empty word");
        words.push_back(std::move(cur));
        cur.clear();
        ++line;
    };
    for (const char ch : content) {
        if (ch == '\n') {
            flush_line();
            continue;
        }
        if (ch == '\r') continue;
        if (ch < 33 || ch > 126)
            throw ParseError(path + ":" + std::to_string(line) +
                             ": byte outside printable ASCII");
        cur.push_back(ch);
    }
    if (!cur.empty()) flush_line();  // tolerate a missing final newline
    if (words.empty()) throw ParseError(path + ": no words");
    return words;
}

Instance::Reduction load_instance(const std::string& path) {
    return Instance::reduce(load_words(path));
}

void save_words(const std::vector<Word>& words, const std::string& path) {
    std::string content;
    for (const Word& w : words) {
        content += w;
        content += '\n';
    }
    write_file(path, content);
}

}  // namespace ssp
