#ifndef SRL_XML_READER_H_
#define SRL_XML_READER_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "srl/corpus.h"

namespace srl {

// Diagnostics collected while reading an XML corpus. Reading never stops on
// these; offending elements or instances are skipped.
struct XmlReport {
  std::vector<std::string> warnings;  // unknown elements, ignored content
  std::vector<std::string> rejected;  // "<instance id>: <reason>"
};

// Reads the minimal XML schema described in docs/xml_schema.md:
//
//   <corpus>
//     <sentence id="...">
//       <token>word</token> ...
//       <predicate index="2" lemma="ganhar" flags="LATER">
//         <argument start="3" end="3" label="A1"/>
//       </predicate>
//     </sentence>
//   </corpus>
//
// Each predicate element yields one instance. Flags given on a predicate or
// on any of its arguments end up in Instance::flags. Throws ParseError when
// the document is not well-formed XML or the root element is wrong.
Corpus ParseXml(std::istream& in, XmlReport* report);

}  // namespace srl

#endif  // SRL_XML_READER_H_
