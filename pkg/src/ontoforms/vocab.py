"""Well-known vocabulary IRIs used throughout the engine."""

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"
RDF_PROPERTY = RDF_NS + "Property"

RDFS_CLASS = RDFS_NS + "Class"
RDFS_SUBCLASSOF = RDFS_NS + "subClassOf"
RDFS_LABEL = RDFS_NS + "label"
RDFS_DOMAIN = RDFS_NS + "domain"
RDFS_RANGE = RDFS_NS + "range"

OWL_CLASS = OWL_NS + "Class"
OWL_THING = OWL_NS + "Thing"
OWL_ONTOLOGY = OWL_NS + "Ontology"
OWL_OBJECT_PROPERTY = OWL_NS + "ObjectProperty"
OWL_DATATYPE_PROPERTY = OWL_NS + "DatatypeProperty"
OWL_FUNCTIONAL_PROPERTY = OWL_NS + "FunctionalProperty"
OWL_EQUIVALENT_CLASS = OWL_NS + "equivalentClass"
OWL_UNION_OF = OWL_NS + "unionOf"
OWL_INTERSECTION_OF = OWL_NS + "intersectionOf"

XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_INT = XSD_NS + "int"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_FLOAT = XSD_NS + "float"
XSD_DOUBLE = XSD_NS + "double"
XSD_NON_NEGATIVE_INTEGER = XSD_NS + "nonNegativeInteger"
XSD_POSITIVE_INTEGER = XSD_NS + "positiveInteger"
XSD_BOOLEAN = XSD_NS + "boolean"
XSD_DATE = XSD_NS + "date"
XSD_DATETIME = XSD_NS + "dateTime"
XSD_GYEAR = XSD_NS + "gYear"

# Namespace the engine itself owns; used for bookkeeping assertions such as
# the intermediate-individual marker.
ONTOFORMS_NS = "http://ontoforms.org/ns#"
CREATED_AS_INTERMEDIATE = ONTOFORMS_NS + "createdAsIntermediate"
