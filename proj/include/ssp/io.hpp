// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ssp/instance.hpp"

namespace ssp {

// Instance files hold one word per line, printable ASCII ([33, 126]) only.
// Empty lines and other bytes raise ParseError; a trailing newline is
// expected on save and tolerated on load.
std::vector<Word> load_words(const std::string& path);
Instance::Reduction load_instance(const std::string& path);
void save_words(const std::vector<Word>& words, const std::string& path);

std::string read_file(const std::string& path);   // IoError on failure
void write_file(const std::string& path, const std::string& content);

}  // namespace ssp
