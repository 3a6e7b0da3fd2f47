#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grapheme {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad engine or resource configuration: invalid parameters, unknown
/// variables/labels, broken or missing data files.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed line in a data file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A word contains a character outside [a-z] (or is empty).
class InvalidWord : public Error {
public:
    InvalidWord(const std::string& word, char offending, std::size_t position)
        : Error("invalid character '" + std::string(1, offending) + "' at position " +
                std::to_string(position + 1) + " in \"" + word + "\""),
          offending_(offending),
          position_(position) {}

    explicit InvalidWord(const std::string& what) : Error(what), offending_('\0'), position_(0) {}

    char offending() const { return offending_; }
    std::size_t position() const { return position_; }

private:
    char offending_;
    std::size_t position_;
};

/// The aggregated output set is identically zero: the crisp inputs sit
/// outside the support of every rule.
class NoRuleFired : public Error {
public:
    NoRuleFired() : Error("no rule fired: aggregated output set is identically zero") {}
};

/// No segmentation of the word exists over the inventory.
class UnsegmentableWord : public Error {
public:
    explicit UnsegmentableWord(const std::string& word)
        : Error("no segmentation of \"" + word + "\" exists over this inventory") {}
};

/// Word absent from the pronunciation dictionary.
class NotInDictionary : public Error {
public:
    explicit NotInDictionary(const std::string& word)
        : Error("\"" + word + "\" is not in the pronunciation dictionary") {}
};

/// An IPA transcription could not be fully split into inventory phonemes;
/// carries the byte offset of the furthest unmatched residue.
class UnparsableIPA : public Error {
public:
    UnparsableIPA(const std::string& ipa, std::size_t offset)
        : Error("cannot parse IPA \"" + ipa + "\" into phonemes (stuck at byte offset " +
                std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// No assignment of candidate graphemes to phonemes covers the word.
class MappingFailed : public Error {
public:
    explicit MappingFailed(const std::string& word)
        : Error("no phoneme-to-grapheme assignment covers \"" + word + "\"") {}
};

}  // namespace grapheme
