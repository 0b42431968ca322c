#ifndef SEMIMATCH_EXCEPTION_HPP_
#define SEMIMATCH_EXCEPTION_HPP_

#include <array>      // for array
#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace semimatch {

  //! Elements of a finite semigroup are dense indices into its table.
  using ElementId = std::size_t;

  //! Default upper bound on the number of elements of generated tables.
  inline constexpr std::size_t kDefaultCap = 5000;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  class RangeError : public Error {
   public:
    using Error::Error;
  };

  //! Thrown when a table fails associativity; (a b) c != a (b c).
  class NotAssociative : public Error {
   public:
    explicit NotAssociative(std::array<ElementId, 3> witness)
        : Error("not associative: (" + std::to_string(witness[0]) + " * "
                + std::to_string(witness[1]) + ") * "
                + std::to_string(witness[2]) + " != "
                + std::to_string(witness[0]) + " * ("
                + std::to_string(witness[1]) + " * "
                + std::to_string(witness[2]) + ")"),
          _witness(witness) {}

    std::array<ElementId, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<ElementId, 3> _witness;
  };

  class NotRegularMatrix : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class TooLarge : public Error {
   public:
    using Error::Error;
  };

  class NotRegular : public Error {
   public:
    explicit NotRegular(ElementId witness)
        : Error("not regular: element " + std::to_string(witness)
                + " has no inverse"),
          _witness(witness) {}

    ElementId witness() const noexcept {
      return _witness;
    }

   private:
    ElementId _witness;
  };

  //! Witness {e, f, ef}: e and f idempotent, ef not idempotent.  The
  //! indices refer to the table the check was run on.
  class NotOrthodox : public Error {
   public:
    explicit NotOrthodox(std::array<ElementId, 3> witness)
        : Error("not orthodox: product of idempotents "
                + std::to_string(witness[0]) + " and "
                + std::to_string(witness[1]) + " is "
                + std::to_string(witness[2]) + ", not an idempotent"),
          _witness(witness) {}

    //! For semigroups that are not even regular there is no idempotent
    //! witness; the message names the element without inverses.
    explicit NotOrthodox(std::string const& why) : Error(why), _witness() {}

    std::array<ElementId, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<ElementId, 3> _witness;
  };

  class NotRegularDClass : public Error {
   public:
    using Error::Error;
  };

  class LiftFailure : public Error {
   public:
    using Error::Error;
  };

}  // namespace semimatch

#endif  // SEMIMATCH_EXCEPTION_HPP_
