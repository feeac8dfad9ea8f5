# services package: parser, serializers, verification suites and the command line
