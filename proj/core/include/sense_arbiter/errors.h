#ifndef SENSE_ARBITER_ERRORS_H_
#define SENSE_ARBITER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sense_arbiter {

// Base for every error raised by the library. The CLI maps all of these to
// exit code 2 (data/format error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingFile : public Error {
 public:
  explicit MissingFile(const std::string &path)
      : Error("cannot open file: " + path), path_(path) {}
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

// Syntax or invariant violation in one of the TSV data files.
class FormatError : public Error {
 public:
  FormatError(const std::string &source, int line, const std::string &reason)
      : Error(source + ":" + std::to_string(line) + ": " + reason),
        source_(source),
        line_(line),
        reason_(reason) {}

  const std::string &source() const { return source_; }
  int line() const { return line_; }
  const std::string &reason() const { return reason_; }

 private:
  std::string source_;
  int line_;
  std::string reason_;
};

class MalformedLexicon : public FormatError {
 public:
  using FormatError::FormatError;
};

class NoSenses : public Error {
 public:
  explicit NoSenses(const std::string &lemma)
      : Error("no senses known for '" + lemma + "'") {}
};

class UnknownSense : public Error {
 public:
  // `where` is an optional "file:line" prefix.
  UnknownSense(const std::string &lemma, const std::string &sense_id,
               const std::string &where = "")
      : Error((where.empty() ? "" : where + ": ") + "unknown sense '" +
              sense_id + "' for '" + lemma + "'") {}
};

class KeywordAbsent : public Error {
 public:
  explicit KeywordAbsent(const std::string &keyword)
      : Error("keyword '" + keyword + "' does not occur in the sentence") {}
};

}  // namespace sense_arbiter

#endif  // SENSE_ARBITER_ERRORS_H_
